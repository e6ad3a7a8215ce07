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

#ifndef POC_QUADRATURE_HPP
#define POC_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <initializer_list>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace poc {

struct QuadratureSpec {
  double abs_tol = 1e-6;
  double rel_tol = 1e-6;
  int max_subdivisions = 50;
};

struct IntegralEstimate {
  double value = 0.0;
  double error = 0.0;  // conservative estimate of the absolute error
};

// Raised when the subdivision budget is exhausted before the tolerance is
// met, or when a result is out of its admissible range by more than the
// achievable accuracy.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, double value, double error)
      : std::runtime_error(what), value(value), error(error) {}

  double value;
  double error;
};

namespace detail {

// Gauss 7 / Kronrod 15 pair on [-1, 1] (QUADPACK dqk15 constants).
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for Kronrod node indices 1, 3, 5 and the center node.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct PanelEstimate {
  double value = 0.0;
  double error = 0.0;
};

template <typename F>
PanelEstimate gauss_kronrod_15(F&& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const double f_center = f(center);
  double result_kronrod = kKronrodWeights[7] * f_center;
  double result_gauss = kGaussWeights[3] * f_center;
  double result_abs = std::abs(result_kronrod);

  std::array<double, 7> f_low;
  std::array<double, 7> f_high;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    f_low[j] = f(center - dx);
    f_high[j] = f(center + dx);
    const double pair_sum = f_low[j] + f_high[j];
    result_kronrod += kKronrodWeights[j] * pair_sum;
    if (j % 2 == 1) result_gauss += kGaussWeights[j / 2] * pair_sum;
    result_abs += kKronrodWeights[j] * (std::abs(f_low[j]) + std::abs(f_high[j]));
  }

  const double mean = 0.5 * result_kronrod;
  double result_asc = kKronrodWeights[7] * std::abs(f_center - mean);
  for (int j = 0; j < 7; ++j) {
    result_asc += kKronrodWeights[j] * (std::abs(f_low[j] - mean) + std::abs(f_high[j] - mean));
  }

  const double abs_half = std::abs(half);
  result_asc *= abs_half;
  result_abs *= abs_half;
  double err = std::abs((result_kronrod - result_gauss) * half);
  // QUADPACK scaling: sharpen the raw Kronrod-Gauss gap into a conservative
  // error estimate and keep a round-off floor.
  if (result_asc != 0.0 && err != 0.0) {
    err = result_asc * std::min(1.0, std::pow(200.0 * err / result_asc, 1.5));
  }
  const double eps50 = 50.0 * std::numeric_limits<double>::epsilon();
  if (result_abs > std::numeric_limits<double>::min() / eps50) {
    err = std::max(eps50 * result_abs, err);
  }
  return {result_kronrod * half, err};
}

struct Interval {
  double a = 0.0;
  double b = 0.0;
  double value = 0.0;
  double error = 0.0;
};

}  // namespace detail

// Globally adaptive Gauss-Kronrod quadrature over the union of the segments
// delimited by `breakpoints` (sorted ascending).  The interval with the
// largest error estimate is bisected until the summed estimate meets
// max(abs_tol, rel_tol * |value|) or the subdivision budget runs out, in
// which case a QuadratureError carrying the best estimate is thrown.
template <typename F>
IntegralEstimate integrate_segments(F&& f, std::span<const double> breakpoints,
                                    const QuadratureSpec& spec) {
  if (breakpoints.size() < 2) return {0.0, 0.0};
  std::vector<detail::Interval> intervals;
  intervals.reserve(breakpoints.size() - 1 + static_cast<std::size_t>(spec.max_subdivisions));
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    const double a = breakpoints[i];
    const double b = breakpoints[i + 1];
    if (!(a < b)) continue;
    const auto panel = detail::gauss_kronrod_15(f, a, b);
    intervals.push_back({a, b, panel.value, panel.error});
  }

  auto totals = [&intervals]() {
    double v = 0.0, e = 0.0;
    for (const auto& iv : intervals) {
      v += iv.value;
      e += iv.error;
    }
    return std::pair{v, e};
  };

  int subdivisions = 0;
  for (;;) {
    auto [value, error] = totals();
    if (error <= std::max(spec.abs_tol, spec.rel_tol * std::abs(value))) {
      return {value, error};
    }
    if (subdivisions >= spec.max_subdivisions) {
      throw QuadratureError("quadrature did not converge within " +
                                std::to_string(spec.max_subdivisions) +
                                " subdivisions (estimate " + std::to_string(value) +
                                ", error " + std::to_string(error) + ")",
                            value, error);
    }
    auto worst = std::max_element(
        intervals.begin(), intervals.end(),
        [](const auto& lhs, const auto& rhs) { return lhs.error < rhs.error; });
    const double mid = 0.5 * (worst->a + worst->b);
    if (!(worst->a < mid && mid < worst->b)) {
      // Interval no longer splittable at double precision; accept as is.
      return {value, error};
    }
    const auto left = detail::gauss_kronrod_15(f, worst->a, mid);
    const auto right = detail::gauss_kronrod_15(f, mid, worst->b);
    const double b_saved = worst->b;
    *worst = {worst->a, mid, left.value, left.error};
    intervals.push_back({mid, b_saved, right.value, right.error});
    ++subdivisions;
  }
}

template <typename F>
IntegralEstimate integrate_1d(F&& f, double a, double b, const QuadratureSpec& spec) {
  if (!(a <= b)) throw std::invalid_argument("integrate_1d: requires a <= b");
  const std::array<double, 2> bps = {a, b};
  return integrate_segments(std::forward<F>(f), bps, spec);
}

// Nested adaptive quadrature of f(x, y) with x running over the segments in
// `x_breakpoints` and y over [y_bounds(x).first, y_bounds(x).second] (empty
// when the bounds cross).  The inner integral is driven two orders of
// magnitude tighter so its noise stays below the outer tolerance.
template <typename F, typename YBounds>
IntegralEstimate integrate_2d_segments(F&& f, std::span<const double> x_breakpoints,
                                       YBounds&& y_bounds, const QuadratureSpec& spec) {
  QuadratureSpec inner_spec = spec;
  inner_spec.abs_tol = 0.01 * spec.abs_tol;
  inner_spec.rel_tol = 0.01 * spec.rel_tol;

  auto outer = [&](double x) {
    const auto [y_lo, y_hi] = y_bounds(x);
    if (!(y_lo < y_hi)) return 0.0;
    return integrate_1d([&](double y) { return f(x, y); }, y_lo, y_hi, inner_spec).value;
  };
  IntegralEstimate est = integrate_segments(outer, x_breakpoints, spec);
  if (x_breakpoints.size() >= 2) {
    const double width = x_breakpoints.back() - x_breakpoints.front();
    est.error += width * inner_spec.abs_tol + inner_spec.rel_tol * std::abs(est.value);
  }
  return est;
}

template <typename F, typename YBounds>
IntegralEstimate integrate_2d(F&& f, double x_lo, double x_hi, YBounds&& y_bounds,
                              const QuadratureSpec& spec) {
  if (!(x_lo <= x_hi)) throw std::invalid_argument("integrate_2d: requires x_lo <= x_hi");
  const std::array<double, 2> bps = {x_lo, x_hi};
  return integrate_2d_segments(std::forward<F>(f), bps, std::forward<YBounds>(y_bounds), spec);
}

template <typename F>
IntegralEstimate integrate_2d(F&& f, double x_lo, double x_hi, double y_lo, double y_hi,
                              const QuadratureSpec& spec) {
  return integrate_2d(std::forward<F>(f), x_lo, x_hi,
                      [y_lo, y_hi](double) { return std::pair{y_lo, y_hi}; }, spec);
}

}  // namespace poc

#endif  // POC_QUADRATURE_HPP
