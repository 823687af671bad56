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

#include <doctest.h>

#include "mosfit/errors.hpp"
#include "mosfit/latent_fit.hpp"

using namespace mosfit;

TEST_CASE("sample_rating point mass cases") {
  SplitMix64 rng(123);
  for (int i = 0; i < 1000; ++i) {
    CHECK(sample_rating(3.0, 1e-9, rng) == 3);
  }
  for (int i = 0; i < 1000; ++i) {
    // clamp at the lower edge
    CHECK(sample_rating(0.0, 1e-9, rng) == 1);
  }
  CHECK_THROWS_AS(sample_rating(3.0, 0.0, rng), InputError);
}

TEST_CASE("sample_rating frequencies match the quantized PMF") {
  const int n = 1000000;
  SplitMix64 rng(2024);
  std::vector<int> counts(5, 0);
  for (int i = 0; i < n; ++i) {
    ++counts[sample_rating(3.0, 1.0, rng) - 1];
  }
  auto expected = quantized_pmf({3.0, 1.0});
  // rating 3 has mass ~0.3829; 3-sigma binomial band is ~0.0015
  double freq3 = static_cast<double>(counts[2]) / n;
  CHECK(std::fabs(freq3 - expected.mass[2]) < 0.0015);
  for (int k = 0; k < 5; ++k) {
    double f = static_cast<double>(counts[k]) / n;
    double band = 3.0 * std::sqrt(expected.mass[k] * (1 - expected.mass[k]) / n);
    CHECK(std::fabs(f - expected.mass[k]) < band + 1e-9);
  }
}

TEST_CASE("generate_dataset determinism") {
  SynthConfig cfg;
  cfg.mu_star = 3.4;
  cfg.sigma_star = 0.9;
  cfg.n_ratings = 8;
  cfg.n_samples = 5;
  cfg.seed = 99;
  auto a = generate_dataset(cfg);
  auto b = generate_dataset(cfg);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].sample_id == b[i].sample_id);
    CHECK(a[i].ratings == b[i].ratings);
  }
  // a different seed changes the draws
  cfg.seed = 100;
  auto c = generate_dataset(cfg);
  bool any_diff = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].ratings != c[i].ratings) any_diff = true;
  }
  CHECK(any_diff);
}

TEST_CASE("generate_dataset near-zero sigma yields constant ratings") {
  SynthConfig cfg;
  cfg.mu_star = 4.0;
  cfg.sigma_star = 1e-9;
  cfg.n_ratings = 16;
  cfg.n_samples = 3;
  for (const auto& rs : generate_dataset(cfg)) {
    for (int r : rs.ratings) CHECK(r == 4);
  }
}

TEST_CASE("generate_dataset rejects bad configs") {
  SynthConfig cfg;
  cfg.n_samples = 0;
  CHECK_THROWS_AS(generate_dataset(cfg), InputError);
  cfg.n_samples = 1;
  cfg.sigma_star = -1.0;
  CHECK_THROWS_AS(generate_dataset(cfg), InputError);
}

TEST_CASE("large-sample fit recovers the generating mean") {
  SynthConfig cfg;
  cfg.mu_star = 3.2;
  cfg.sigma_star = 0.8;
  cfg.n_ratings = 100000;
  cfg.n_samples = 1;
  cfg.seed = 7;
  auto data = generate_dataset(cfg);
  FitConfig fit_cfg;
  fit_cfg.beta = 0.0;
  auto res = fit(data[0], fit_cfg);
  CHECK(std::fabs(res.representative - 3.2) < 0.02);
}
