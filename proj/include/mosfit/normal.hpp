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

#ifndef MOSFIT_NORMAL_HPP_
#define MOSFIT_NORMAL_HPP_

namespace mosfit {

// Standard normal CDF, Phi(z) = 0.5 * erfc(-z / sqrt(2)).
// Absolute error below 1e-15 over the full double range; monotone,
// Phi(0) == 0.5, and Phi(-z) == 1 - Phi(z) to within 1e-14.
// Throws InputError for non-finite z.
double standard_normal_cdf(double z);

// Standard normal density.
double standard_normal_pdf(double z);

// Inverse of standard_normal_cdf on (0, 1). Rational initial guess refined
// with a Halley step against standard_normal_cdf; relative error ~1e-15.
// Throws InputError for p outside (0, 1).
double standard_normal_quantile(double p);

}  // namespace mosfit

#endif  // MOSFIT_NORMAL_HPP_
