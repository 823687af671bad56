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

#include "mosfit/synth.hpp"

#include <cmath>
#include <cstdio>

#include "mosfit/errors.hpp"
#include "mosfit/normal.hpp"

namespace mosfit {

SplitMix64 SplitMix64::substream(std::uint64_t seed, std::uint64_t index) {
  // Mix the index through one splitmix step before combining, so adjacent
  // sample streams are decorrelated.
  SplitMix64 mixer(index);
  return SplitMix64(seed ^ mixer.next());
}

int sample_rating(double mu, double sigma, SplitMix64& rng, int scale_max) {
  if (!(sigma > 0.0) || !std::isfinite(mu) || !std::isfinite(sigma)) {
    throw InputError("sample_rating: need finite mu and sigma > 0");
  }
  double u = rng.next_uniform();
  double score = mu + sigma * standard_normal_quantile(u);
  // Round half away from zero; scores here are positive in practice but the
  // rule is total.
  double rounded = (score >= 0.0) ? std::floor(score + 0.5)
                                  : std::ceil(score - 0.5);
  if (rounded < 1.0) rounded = 1.0;
  if (rounded > static_cast<double>(scale_max)) {
    rounded = static_cast<double>(scale_max);
  }
  return static_cast<int>(rounded);
}

std::vector<RatingSet> generate_dataset(const SynthConfig& cfg) {
  if (cfg.n_samples < 1 || cfg.n_ratings < 1 || !(cfg.sigma_star > 0.0)) {
    throw InputError("generate_dataset: invalid config");
  }
  std::vector<RatingSet> out;
  out.reserve(static_cast<std::size_t>(cfg.n_samples));
  for (int i = 0; i < cfg.n_samples; ++i) {
    SplitMix64 rng = SplitMix64::substream(cfg.seed,
                                           static_cast<std::uint64_t>(i));
    RatingSet rs;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "-%06d", i);
    rs.sample_id = cfg.id_prefix + buf;
    rs.ratings.reserve(static_cast<std::size_t>(cfg.n_ratings));
    for (int n = 0; n < cfg.n_ratings; ++n) {
      rs.ratings.push_back(
          sample_rating(cfg.mu_star, cfg.sigma_star, rng, cfg.scale_max));
    }
    out.push_back(std::move(rs));
  }
  return out;
}

}  // namespace mosfit
