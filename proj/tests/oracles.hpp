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

// Test-only reference implementations, kept independent of the library's
// quadrature/closed-form paths they are used to check.

#ifndef POC_TESTS_ORACLES_HPP
#define POC_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "poc/gaussian.hpp"
#include "poc/geometry.hpp"

namespace poc::oracle {

// erf via long double Taylor series for |x| <= 3 and a Lentz-evaluated
// continued fraction for erfc beyond; accurate to well below 1e-15.
inline double erf_reference(double x) {
  const long double ax = std::abs(static_cast<long double>(x));
  const long double sign = x < 0.0 ? -1.0L : 1.0L;
  constexpr long double kTwoOverSqrtPi = 1.1283791670955125738961589031215L;
  if (ax == 0.0L) return 0.0;
  if (ax <= 3.0L) {
    // erf(x) = 2/sqrt(pi) * sum_n (-1)^n x^(2n+1) / (n! (2n+1))
    long double term = ax;
    long double sum = ax;
    const long double x2 = ax * ax;
    for (int n = 1; n < 200; ++n) {
      term *= -x2 / n;
      const long double contribution = term / (2 * n + 1);
      sum += contribution;
      if (std::abs(contribution) < 1e-22L * std::abs(sum)) break;
    }
    return static_cast<double>(sign * kTwoOverSqrtPi * sum);
  }
  if (ax >= 7.0L) return static_cast<double>(sign);  // erfc(7) ~ 4e-23
  // erfc(x) = exp(-x^2)/sqrt(pi) / (x + 1/2/(x + 1/(x + 3/2/(x + ...))))
  // evaluated bottom-up at fixed depth.
  long double cf = 0.0L;
  for (int k = 60; k >= 1; --k) {
    cf = (k / 2.0L) / (ax + cf);
  }
  const long double erfc = std::exp(-ax * ax) / (std::sqrt(std::numbers::pi_v<long double>) * (ax + cf));
  return static_cast<double>(sign * (1.0L - erfc));
}

// Closed form for the zero-mean isotropic circle case.
inline double rayleigh_cdf(double radius, double sigma) {
  return 1.0 - std::exp(-radius * radius / (2.0 * sigma * sigma));
}

inline bool in_disc_union(Vec2 q, std::span<const Vec2> centers, double radius) {
  const double r2 = radius * radius;
  for (const Vec2& c : centers) {
    if (squared_norm(q - c) <= r2) return true;
  }
  return false;
}

// Midpoint-rule integration of pdf * union indicator over mean +- 8 sigma,
// n x n cells.
inline double grid_union_poc(std::span<const Vec2> centers, double radius,
                             const DiagGaussian2& g, int n = 2001) {
  const double x0 = g.mean.x - 8.0 * g.sigma1;
  const double y0 = g.mean.y - 8.0 * g.sigma2;
  const double hx = 16.0 * g.sigma1 / n;
  const double hy = 16.0 * g.sigma2 / n;
  const double cell = hx * hy;
  double total = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = x0 + (i + 0.5) * hx;
    for (int j = 0; j < n; ++j) {
      const double y = y0 + (j + 0.5) * hy;
      if (in_disc_union({x, y}, centers, radius)) total += pdf(g, {x, y}) * cell;
    }
  }
  return total;
}

// Monte Carlo estimate of the union event; returns (estimate, standard error).
struct McsEstimate {
  double value = 0.0;
  double stderr_est = 0.0;
};

inline McsEstimate mcs_union_poc(std::span<const Vec2> centers, double radius,
                                 const DiagGaussian2& g, std::size_t n, RandomSeed seed) {
  SplitMix64 rng(seed);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 z = rng.next_standard_pair();
    if (in_disc_union({g.mean.x + g.sigma1 * z.x, g.mean.y + g.sigma2 * z.y}, centers, radius)) {
      ++hits;
    }
  }
  const double p = static_cast<double>(hits) / static_cast<double>(n);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n))};
}

// Monte Carlo estimate of the all-discs intersection event.
inline McsEstimate mcs_intersection_poc(std::span<const Vec2> centers, double radius,
                                        const DiagGaussian2& g, std::size_t n, RandomSeed seed) {
  SplitMix64 rng(seed);
  const double r2 = radius * radius;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 z = rng.next_standard_pair();
    const Vec2 q{g.mean.x + g.sigma1 * z.x, g.mean.y + g.sigma2 * z.y};
    bool inside_all = true;
    for (const Vec2& c : centers) {
      if (squared_norm(q - c) > r2) {
        inside_all = false;
        break;
      }
    }
    if (inside_all) ++hits;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(n);
  return {p, std::sqrt(p * (1.0 - p) / static_cast<double>(n))};
}

// Deterministic uniform helper for generating random test instances.
class TestRng {
 public:
  explicit TestRng(std::uint64_t seed) : rng_(RandomSeed{seed}) {}

  double uniform(double lo, double hi) { return lo + (hi - lo) * rng_.next_unit(); }
  std::uint64_t next_u64() { return rng_.next_u64(); }

 private:
  SplitMix64 rng_;
};

}  // namespace poc::oracle

#endif  // POC_TESTS_ORACLES_HPP
