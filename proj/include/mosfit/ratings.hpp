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

#ifndef MOSFIT_RATINGS_HPP_
#define MOSFIT_RATINGS_HPP_

#include <cstddef>
#include <string>
#include <vector>

namespace mosfit {

inline constexpr int kDefaultScaleMax = 5;

// One sample's discrete opinion ratings on a 1..K scale.
// Per-sample rating counts may differ across a dataset.
struct RatingSet {
  std::string sample_id;
  std::vector<int> ratings;
};

// Relative frequency of each rating category; entries sum to 1.
struct RelFreq {
  std::vector<double> mass;
};

// Mean and population standard deviation of a rating list.
struct EmpiricalStats {
  double mean = 0.0;
  double stddev = 0.0;
};

// Throws InputError (naming the sample id) if the rating list is empty or
// any rating falls outside 1..K.
void validate(const RatingSet& rs, int scale_max = kDefaultScaleMax);

// Arithmetic mean of the ratings.
double mos(const RatingSet& rs);

// Mean of the n smallest ratings. Throws InputError if n < 1 or n exceeds
// the number of ratings; counts are never clamped silently.
double n_low_mos(const RatingSet& rs, std::size_t n);

// Histogram of ratings normalized to relative frequencies over 1..K.
RelFreq rel_freq(const RatingSet& rs, int scale_max = kDefaultScaleMax);

// Mean and population (divide-by-N) standard deviation.
EmpiricalStats empirical_stats(const RatingSet& rs);

}  // namespace mosfit

#endif  // MOSFIT_RATINGS_HPP_
