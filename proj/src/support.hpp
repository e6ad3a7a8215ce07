// Copyright 2026 The poclib Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Internal helpers shared by the integral-based estimators.

#ifndef POC_SRC_SUPPORT_HPP
#define POC_SRC_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <numbers>
#include <vector>

#include "poc/quadrature.hpp"

namespace poc::internal {

// Gaussian mass outside +-8.75 sigma is below 2e-18; integration ranges are
// clipped to this support so remote means cost nothing and concentrated
// densities are resolved from the first panel on.
inline constexpr double kSigmaSupport = 8.75;

// Relative inset for extra breakpoints next to sqrt-type interval endpoints,
// where the integrand derivative blows up.
inline constexpr double kEndpointInset = 1e-6;

inline constexpr double kSqrt2 = std::numbers::sqrt2;
inline const double kSqrt2Pi = std::sqrt(2.0 * std::numbers::pi);

// Sorted breakpoint list {lo, interior points within (lo, hi), hi}.
inline std::vector<double> make_breakpoints(double lo, double hi,
                                            std::initializer_list<double> interior) {
  std::vector<double> bps;
  bps.reserve(2 + interior.size());
  bps.push_back(lo);
  for (double p : interior) {
    if (p > lo && p < hi) bps.push_back(p);
  }
  bps.push_back(hi);
  std::sort(bps.begin(), bps.end());
  return bps;
}

// Clamps values that stray outside [0, 1] by no more than the achievable
// accuracy; anything further out is a numerical failure.
inline double clamp_probability(double value, double error, const QuadratureSpec& spec,
                                const char* what) {
  const double slack = 10.0 * (error + spec.abs_tol) + 1e-12;
  if (value < -slack || value > 1.0 + slack) {
    throw QuadratureError(std::string(what) + ": result outside [0, 1] beyond tolerance",
                          value, error);
  }
  return std::clamp(value, 0.0, 1.0);
}

}  // namespace poc::internal

#endif  // POC_SRC_SUPPORT_HPP
