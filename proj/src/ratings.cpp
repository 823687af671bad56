// Copyright 2026 The mosfit Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mosfit/ratings.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "mosfit/errors.hpp"

namespace mosfit {

void validate(const RatingSet& rs, int scale_max) {
  if (rs.ratings.empty()) {
    throw InputError("sample '" + rs.sample_id + "': empty rating list");
  }
  for (int r : rs.ratings) {
    if (r < 1 || r > scale_max) {
      throw InputError("sample '" + rs.sample_id + "': rating " +
                       std::to_string(r) + " outside 1.." +
                       std::to_string(scale_max));
    }
  }
}

double mos(const RatingSet& rs) {
  if (rs.ratings.empty()) {
    throw InputError("sample '" + rs.sample_id + "': empty rating list");
  }
  double sum = std::accumulate(rs.ratings.begin(), rs.ratings.end(), 0.0);
  return sum / static_cast<double>(rs.ratings.size());
}

double n_low_mos(const RatingSet& rs, std::size_t n) {
  if (rs.ratings.empty()) {
    throw InputError("sample '" + rs.sample_id + "': empty rating list");
  }
  if (n < 1 || n > rs.ratings.size()) {
    throw InputError("sample '" + rs.sample_id + "': n=" + std::to_string(n) +
                     " outside 1.." + std::to_string(rs.ratings.size()));
  }
  std::vector<int> sorted = rs.ratings;
  std::sort(sorted.begin(), sorted.end());
  double sum = std::accumulate(sorted.begin(), sorted.begin() + n, 0.0);
  return sum / static_cast<double>(n);
}

RelFreq rel_freq(const RatingSet& rs, int scale_max) {
  validate(rs, scale_max);
  RelFreq rf;
  rf.mass.assign(static_cast<std::size_t>(scale_max), 0.0);
  const double w = 1.0 / static_cast<double>(rs.ratings.size());
  for (int r : rs.ratings) {
    rf.mass[static_cast<std::size_t>(r - 1)] += w;
  }
  return rf;
}

EmpiricalStats empirical_stats(const RatingSet& rs) {
  EmpiricalStats st;
  st.mean = mos(rs);
  double ss = 0.0;
  for (int r : rs.ratings) {
    double d = static_cast<double>(r) - st.mean;
    ss += d * d;
  }
  st.stddev = std::sqrt(ss / static_cast<double>(rs.ratings.size()));
  return st;
}

}  // namespace mosfit
