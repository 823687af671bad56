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

#ifndef MOSFIT_LATENT_FIT_HPP_
#define MOSFIT_LATENT_FIT_HPP_

#include <span>
#include <vector>

#include "mosfit/ratings.hpp"

namespace mosfit {

// Parameters of the latent normal distribution whose quantization models a
// sample's rating histogram.
struct LatentParams {
  double mu = 0.0;
  double sigma = 1.0;  // always > FitConfig::sigma_min after a fit
};

// Categorical distribution over ratings 1..K obtained by integrating the
// latent Gaussian over the bins (-inf,1.5], (k-0.5,k+0.5], [K-0.5,inf).
struct QuantizedPMF {
  std::vector<double> mass;
};

struct FitConfig {
  double beta = 0.03;       // weight of the (sigma - sigma0)^2 regularizer
  int max_iters = 100;      // simplex update steps
  double sigma_min = 1e-5;  // hard lower bound on sigma
  int scale_max = kDefaultScaleMax;
};

struct FitResult {
  LatentParams params;      // iterate with minimum observed loss
  double loss = 0.0;        // minimum loss observed (including the start)
  double initial_loss = 0.0;
  int iterations_run = 0;
  bool fell_back = false;   // no iterate beat the start, or degenerate input
  double representative = 0.0;  // fitted mu, or the fallback value
};

// Quantized PMF of the latent Gaussian. Entries are clamped to be
// non-negative and renormalized when rounding pushes the sum off 1 by more
// than 1e-12. Throws InputError on non-finite parameters.
QuantizedPMF quantized_pmf(const LatentParams& p,
                           int scale_max = kDefaultScaleMax);

// L1 distance between the cumulative distributions of two same-length
// probability vectors; equals the 1-D earth mover's distance with unit
// spacing between adjacent categories.
double cdf_l1_distance(std::span<const double> a, std::span<const double> b);

// Fitting objective: cdf_l1_distance(quantized_pmf(p), r)
//                    + beta * (p.sigma - stats.stddev)^2.
double loss(const LatentParams& p, const RelFreq& r,
            const EmpiricalStats& stats, const FitConfig& cfg);

// Analytic gradient of loss w.r.t. (mu, sigma). Valid away from the kinks
// of the L1 term (points where some CDF difference changes sign).
struct LossGradient {
  double d_mu = 0.0;
  double d_sigma = 0.0;
};
LossGradient loss_gradient(const LatentParams& p, const RelFreq& r,
                           const EmpiricalStats& stats, const FitConfig& cfg);

// Fit the latent parameters to a rating set. All-identical ratings skip
// optimization and fall back to the constant rating. Otherwise a
// Nelder-Mead search on (mu, log(sigma - sigma_min)) starts at the
// empirical (mean, stddev) and the best loss over every evaluated point
// (including the start) is kept; if nothing beats the start the result
// falls back to the plain MOS.
FitResult fit(const RatingSet& rs, const FitConfig& cfg = {});

// Same search applied directly to a histogram, with an explicit starting
// point (init.mean, init.stddev). Used by fit() and by synthetic-recovery
// experiments where the histogram is analytic rather than observed.
FitResult fit_histogram(const RelFreq& r, const EmpiricalStats& init,
                        const FitConfig& cfg = {});

}  // namespace mosfit

#endif  // MOSFIT_LATENT_FIT_HPP_
