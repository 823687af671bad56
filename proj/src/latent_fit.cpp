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

#include "mosfit/latent_fit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#include "mosfit/errors.hpp"
#include "mosfit/normal.hpp"

namespace mosfit {

QuantizedPMF quantized_pmf(const LatentParams& p, int scale_max) {
  if (!std::isfinite(p.mu) || !std::isfinite(p.sigma) || p.sigma <= 0.0) {
    throw InputError("quantized_pmf: parameters must be finite with sigma > 0");
  }
  if (scale_max < 2) {
    throw InputError("quantized_pmf: scale_max must be >= 2");
  }
  const std::size_t k = static_cast<std::size_t>(scale_max);
  // Interior bin edges at 1.5, 2.5, ..., K-0.5.
  std::vector<double> edge_cdf(k - 1);
  for (std::size_t i = 0; i < k - 1; ++i) {
    double edge = static_cast<double>(i) + 1.5;
    edge_cdf[i] = standard_normal_cdf((edge - p.mu) / p.sigma);
  }
  QuantizedPMF pmf;
  pmf.mass.resize(k);
  pmf.mass[0] = edge_cdf[0];
  for (std::size_t i = 1; i < k - 1; ++i) {
    pmf.mass[i] = edge_cdf[i] - edge_cdf[i - 1];
  }
  pmf.mass[k - 1] = 1.0 - edge_cdf[k - 2];

  // Cancellation in adjacent CDF differences can produce tiny negatives.
  double sum = 0.0;
  for (double& m : pmf.mass) {
    if (m < 0.0) m = 0.0;
    sum += m;
  }
  if (std::abs(sum - 1.0) > 1e-12 && sum > 0.0) {
    for (double& m : pmf.mass) m /= sum;
  }
  return pmf;
}

double cdf_l1_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size() || a.empty()) {
    throw InputError("cdf_l1_distance: vectors must be non-empty and equal length");
  }
  double cum_a = 0.0;
  double cum_b = 0.0;
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    cum_a += a[i];
    cum_b += b[i];
    d += std::abs(cum_a - cum_b);
  }
  return d;
}

double loss(const LatentParams& p, const RelFreq& r,
            const EmpiricalStats& stats, const FitConfig& cfg) {
  QuantizedPMF pmf = quantized_pmf(p, cfg.scale_max);
  double ds = p.sigma - stats.stddev;
  return cdf_l1_distance(pmf.mass, r.mass) + cfg.beta * ds * ds;
}

LossGradient loss_gradient(const LatentParams& p, const RelFreq& r,
                           const EmpiricalStats& stats, const FitConfig& cfg) {
  QuantizedPMF pmf = quantized_pmf(p, cfg.scale_max);
  const std::size_t k = pmf.mass.size();
  LossGradient g;
  double cum_model = 0.0;
  double cum_data = 0.0;
  // The k-th CDF term is identically 1 on both sides; its gradient is 0.
  for (std::size_t i = 0; i + 1 < k; ++i) {
    cum_model += pmf.mass[i];
    cum_data += r.mass[i];
    double sgn = (cum_model > cum_data) ? 1.0 : (cum_model < cum_data ? -1.0 : 0.0);
    double z = (static_cast<double>(i) + 1.5 - p.mu) / p.sigma;
    double pdf = standard_normal_pdf(z);
    g.d_mu += sgn * (-pdf / p.sigma);
    g.d_sigma += sgn * (-z * pdf / p.sigma);
  }
  g.d_sigma += 2.0 * cfg.beta * (p.sigma - stats.stddev);
  return g;
}

namespace {

using Point = std::array<double, 2>;

LatentParams to_params(const Point& x, double sigma_min) {
  return LatentParams{x[0], sigma_min + std::exp(x[1])};
}

struct Tracker {
  double best_loss;
  Point best_x;
  bool aborted = false;
};

// Nelder-Mead on (mu, log(sigma - sigma_min)). One iteration = one simplex
// update step; every function evaluation feeds the best-iterate tracker.
int nelder_mead(const std::function<double(const Point&)>& f, Point start,
                int max_iters, Tracker& trk) {
  constexpr double kScale = 0.25;    // initial simplex offset per coordinate
  constexpr double kDiamTol = 1e-9;  // early stop on simplex collapse

  std::array<Point, 3> pts{start, start, start};
  pts[1][0] += kScale;
  pts[2][1] += kScale;
  std::array<double, 3> vals;

  auto eval = [&](const Point& x) {
    double v = f(x);
    if (!std::isfinite(v)) {
      trk.aborted = true;
      return v;
    }
    if (v < trk.best_loss) {
      trk.best_loss = v;
      trk.best_x = x;
    }
    return v;
  };

  for (int i = 0; i < 3; ++i) {
    vals[i] = eval(pts[i]);
    if (trk.aborted) return 0;
  }

  int iters = 0;
  while (iters < max_iters) {
    // Order: pts[0] best, pts[2] worst.
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return vals[a] < vals[b]; });
    std::array<Point, 3> sp{pts[order[0]], pts[order[1]], pts[order[2]]};
    std::array<double, 3> sv{vals[order[0]], vals[order[1]], vals[order[2]]};
    pts = sp;
    vals = sv;

    double diam = 0.0;
    for (int i = 1; i < 3; ++i) {
      diam = std::max(diam, std::abs(pts[i][0] - pts[0][0]));
      diam = std::max(diam, std::abs(pts[i][1] - pts[0][1]));
    }
    if (diam < kDiamTol) break;

    Point centroid{(pts[0][0] + pts[1][0]) / 2.0,
                   (pts[0][1] + pts[1][1]) / 2.0};
    auto along = [&](double t) {
      return Point{centroid[0] + t * (centroid[0] - pts[2][0]),
                   centroid[1] + t * (centroid[1] - pts[2][1])};
    };

    Point xr = along(1.0);
    double fr = eval(xr);
    if (trk.aborted) return iters;

    if (fr < vals[0]) {
      Point xe = along(2.0);
      double fe = eval(xe);
      if (trk.aborted) return iters;
      if (fe < fr) {
        pts[2] = xe;
        vals[2] = fe;
      } else {
        pts[2] = xr;
        vals[2] = fr;
      }
    } else if (fr < vals[1]) {
      pts[2] = xr;
      vals[2] = fr;
    } else {
      Point xc = (fr < vals[2]) ? along(0.5)
                                : Point{centroid[0] + 0.5 * (pts[2][0] - centroid[0]),
                                        centroid[1] + 0.5 * (pts[2][1] - centroid[1])};
      double fc = eval(xc);
      if (trk.aborted) return iters;
      if (fc < std::min(fr, vals[2])) {
        pts[2] = xc;
        vals[2] = fc;
      } else {
        // Shrink toward the best vertex.
        for (int i = 1; i < 3; ++i) {
          pts[i][0] = pts[0][0] + 0.5 * (pts[i][0] - pts[0][0]);
          pts[i][1] = pts[0][1] + 0.5 * (pts[i][1] - pts[0][1]);
          vals[i] = eval(pts[i]);
          if (trk.aborted) return iters;
        }
      }
    }
    ++iters;
  }
  return iters;
}

}  // namespace

FitResult fit_histogram(const RelFreq& r, const EmpiricalStats& init,
                        const FitConfig& cfg) {
  const double sigma_start = std::max(init.stddev, 2.0 * cfg.sigma_min);
  const LatentParams start{init.mean, sigma_start};

  FitResult res;
  res.params = start;
  res.representative = init.mean;
  res.fell_back = true;

  double initial_loss;
  try {
    initial_loss = loss(start, r, init, cfg);
  } catch (const InputError&) {
    res.loss = res.initial_loss = std::numeric_limits<double>::quiet_NaN();
    return res;
  }
  res.initial_loss = initial_loss;
  res.loss = initial_loss;
  if (!std::isfinite(initial_loss)) return res;

  Tracker trk{initial_loss,
              {init.mean, std::log(std::max(sigma_start - cfg.sigma_min,
                                            1e-12))}};
  const Point start_x = trk.best_x;

  auto objective = [&](const Point& x) {
    return loss(to_params(x, cfg.sigma_min), r, init, cfg);
  };
  res.iterations_run = nelder_mead(objective, start_x, cfg.max_iters, trk);

  if (trk.aborted) {
    // Non-finite loss encountered; keep the fallback result.
    return res;
  }
  if (trk.best_loss < initial_loss) {
    res.params = to_params(trk.best_x, cfg.sigma_min);
    res.loss = trk.best_loss;
    res.fell_back = false;
    res.representative = res.params.mu;
  }
  return res;
}

FitResult fit(const RatingSet& rs, const FitConfig& cfg) {
  validate(rs, cfg.scale_max);

  bool all_same = std::all_of(rs.ratings.begin(), rs.ratings.end(),
                              [&](int r) { return r == rs.ratings.front(); });
  if (all_same) {
    FitResult res;
    res.params = LatentParams{static_cast<double>(rs.ratings.front()),
                              cfg.sigma_min};
    res.loss = 0.0;
    res.initial_loss = 0.0;
    res.iterations_run = 0;
    res.fell_back = true;
    res.representative = static_cast<double>(rs.ratings.front());
    return res;
  }

  return fit_histogram(rel_freq(rs, cfg.scale_max), empirical_stats(rs), cfg);
}

}  // namespace mosfit
