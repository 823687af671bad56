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

#ifndef MOSFIT_SYNTH_HPP_
#define MOSFIT_SYNTH_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "mosfit/ratings.hpp"

namespace mosfit {

// splitmix64: a fixed, platform-independent generator, so seeded datasets
// are byte-identical everywhere. Per-sample substreams are derived from
// (seed, sample index), making generation order-independent.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform double in the open interval (0, 1).
  double next_uniform() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Substream generator for one sample of one dataset.
  static SplitMix64 substream(std::uint64_t seed, std::uint64_t index);

 private:
  std::uint64_t state_;
};

struct SynthConfig {
  double mu_star = 3.0;
  double sigma_star = 1.0;
  int n_ratings = 8;
  int n_samples = 1;
  std::uint64_t seed = 0;
  int scale_max = kDefaultScaleMax;
  std::string id_prefix = "synth";
};

// One simulated annotation: draw a continuous score from N(mu, sigma) via
// inverse-CDF transform, round half away from zero, clamp to 1..K. The
// induced categorical law is exactly the quantized PMF of (mu, sigma).
int sample_rating(double mu, double sigma, SplitMix64& rng,
                  int scale_max = kDefaultScaleMax);

// n_samples rating sets of n_ratings i.i.d. draws each; deterministic in
// the seed. Sample ids are "<prefix>-NNNNNN".
std::vector<RatingSet> generate_dataset(const SynthConfig& cfg);

}  // namespace mosfit

#endif  // MOSFIT_SYNTH_HPP_
