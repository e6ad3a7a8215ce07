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

#include "poc/poc_multicircle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "poc/poc_circle.hpp"
#include "support.hpp"

namespace poc {
namespace {

using internal::clamp_probability;
using internal::kEndpointInset;
using internal::kSigmaSupport;
using internal::kSqrt2;
using internal::kSqrt2Pi;
using internal::make_breakpoints;

// Lenses whose half height is below this are beyond quadrature resolution
// and contribute nothing.
constexpr double kMinLensHalfHeight = 1e-9;

// Weighted erf pair: probability of the axial coordinate falling within
// +-half_width around the mean, times the perpendicular Gaussian weight.
double clipped_strip_integrand(double t, double mu_perp, double sigma_perp, double mu_axis,
                               double inv_sigma_axis_sqrt2, double half_width,
                               double prefactor) {
  const double z = (t - mu_perp) / sigma_perp;
  return prefactor * std::exp(-0.5 * z * z) *
         (std::erf((half_width - mu_axis) * inv_sigma_axis_sqrt2) +
          std::erf((half_width + mu_axis) * inv_sigma_axis_sqrt2));
}

// Lens term between two concrete centers; 0 when the discs do not overlap
// or the lens is degenerate.
double lens_term(Vec2 center_a, Vec2 center_b, double collision_radius, const DiagGaussian2& g,
                 const QuadratureSpec& spec) {
  const Vec2 delta = center_b - center_a;
  const double spacing = norm(delta);
  if (spacing >= 2.0 * collision_radius) return 0.0;
  const bool along_x = std::abs(delta.x) > std::abs(delta.y);

  const double half_height =
      std::sqrt(std::max(0.0, collision_radius * collision_radius - spacing * spacing / 4.0));
  if (half_height < kMinLensHalfHeight) return 0.0;

  const Vec2 midpoint = 0.5 * (center_a + center_b);
  const Vec2 mean = g.mean - midpoint;
  const double mu_axis = along_x ? mean.x : mean.y;
  const double sigma_axis = along_x ? g.sigma1 : g.sigma2;
  const double mu_perp = along_x ? mean.y : mean.x;
  const double sigma_perp = along_x ? g.sigma2 : g.sigma1;

  const double lo = std::max(-half_height, mu_perp - kSigmaSupport * sigma_perp);
  const double hi = std::min(half_height, mu_perp + kSigmaSupport * sigma_perp);
  if (!(lo < hi)) return 0.0;

  const double inset = half_height * (1.0 - kEndpointInset);
  const auto bps = make_breakpoints(lo, hi,
                                    {-inset, inset, mu_perp - 2.0 * sigma_perp, mu_perp,
                                     mu_perp + 2.0 * sigma_perp});
  const double r2 = collision_radius * collision_radius;
  const double half_spacing = spacing / 2.0;
  const double inv_sa = 1.0 / (sigma_axis * kSqrt2);
  const double prefactor = 1.0 / (2.0 * kSqrt2Pi * sigma_perp);

  const auto est = integrate_segments(
      [=](double t) {
        const double half_width = std::sqrt(std::max(0.0, r2 - t * t)) - half_spacing;
        return clipped_strip_integrand(t, mu_perp, sigma_perp, mu_axis, inv_sa,
                                       std::max(0.0, half_width), prefactor);
      },
      bps, spec);
  return clamp_probability(est.value, est.error, spec, "poc_lens");
}

struct GridSpacing {
  Vec2 centroid;
  double half_dx = 0.0;  // half the axial spacing
  double half_dy = 0.0;  // half the axis spacing
};

GridSpacing overlap_grid(const OverlapRegion& region) {
  double min_x = region.centers[0].x, max_x = min_x;
  double min_y = region.centers[0].y, max_y = min_y;
  for (const Vec2& c : region.centers) {
    min_x = std::min(min_x, c.x);
    max_x = std::max(max_x, c.x);
    min_y = std::min(min_y, c.y);
    max_y = std::max(max_y, c.y);
  }
  // The four centers must sit on the corners of an axis-aligned box.
  const double tol = 1e-9 * (1.0 + std::max(max_x - min_x, max_y - min_y));
  for (const Vec2& c : region.centers) {
    if (std::min(std::abs(c.x - min_x), std::abs(c.x - max_x)) > tol ||
        std::min(std::abs(c.y - min_y), std::abs(c.y - max_y)) > tol) {
      throw std::invalid_argument("poc_overlap: centers do not form an axis-aligned 2x2 grid");
    }
  }
  return {{0.5 * (min_x + max_x), 0.5 * (min_y + max_y)}, 0.5 * (max_x - min_x),
          0.5 * (max_y - min_y)};
}

}  // namespace

LensOverlapCounts lens_overlap_counts(int n_circles, int n_axes) {
  if (n_circles < 1 || n_axes < 1) {
    throw std::invalid_argument("lens_overlap_counts: counts must be positive");
  }
  if (n_circles % n_axes != 0) {
    throw std::invalid_argument("lens_overlap_counts: n_circles must be divisible by n_axes");
  }
  const int per_axis = n_circles / n_axes;
  return {2 * n_circles - per_axis - n_axes, (per_axis - 1) * (n_axes - 1)};
}

double poc_lens(const LensGeometry& lens, const DiagGaussian2& g, const QuadratureSpec& spec) {
  validate(g);
  const Vec2 offset = 0.5 * lens.center_spacing * lens.axis_unit;
  return lens_term(lens.midpoint - offset, lens.midpoint + offset, lens.collision_radius, g,
                   spec);
}

double poc_overlap(const OverlapRegion& region, const DiagGaussian2& g,
                   const QuadratureSpec& spec) {
  validate(g);
  if (!(region.collision_radius > 0.0)) {
    throw std::invalid_argument("poc_overlap: collision radius must be positive");
  }
  const GridSpacing grid = overlap_grid(region);
  const double radius = region.collision_radius;
  const double r2 = radius * radius;
  if (grid.half_dx * grid.half_dx + grid.half_dy * grid.half_dy >= r2) {
    throw std::invalid_argument("poc_overlap: the four collision discs have no common point");
  }

  // In centroid-relative coordinates the region is |u| <= U(v) with
  // U(v) = sqrt(R^2 - (|v| + dy)^2) - dx over |v| <= V.
  const double v_max = std::sqrt(r2 - grid.half_dx * grid.half_dx) - grid.half_dy;
  if (v_max < kMinLensHalfHeight) return 0.0;

  const double mu_u = g.mean.x - grid.centroid.x;
  const double mu_v = g.mean.y - grid.centroid.y;
  const double lo = std::max(-v_max, mu_v - kSigmaSupport * g.sigma2);
  const double hi = std::min(v_max, mu_v + kSigmaSupport * g.sigma2);
  if (!(lo < hi)) return 0.0;

  const double inset = v_max * (1.0 - kEndpointInset);
  // v = 0 is a kink of U(v).
  const auto bps = make_breakpoints(
      lo, hi,
      {-inset, 0.0, inset, mu_v - 2.0 * g.sigma2, mu_v, mu_v + 2.0 * g.sigma2});
  const double half_dx = grid.half_dx;
  const double half_dy = grid.half_dy;
  const double sigma_v = g.sigma2;
  const double inv_su = 1.0 / (g.sigma1 * kSqrt2);
  const double prefactor = 1.0 / (2.0 * kSqrt2Pi * sigma_v);

  const auto est = integrate_segments(
      [=](double v) {
        const double reach = std::abs(v) + half_dy;
        const double half_width = std::sqrt(std::max(0.0, r2 - reach * reach)) - half_dx;
        return clipped_strip_integrand(v, mu_v, sigma_v, mu_u, inv_su,
                                       std::max(0.0, half_width), prefactor);
      },
      bps, spec);
  return clamp_probability(est.value, est.error, spec, "poc_overlap");
}

namespace {

MultiCircleBreakdown assemble(const CoverArrangement& arr, double r_o, const DiagGaussian2& g,
                              const QuadratureSpec& spec) {
  validate(g);
  if (!(r_o > 0.0)) throw std::invalid_argument("multi-circle POC: r_o must be positive");
  if (arr.n_axes < 1 || arr.n_circles < 1 || arr.n_circles % arr.n_axes != 0 ||
      static_cast<int>(arr.centers.size()) != arr.n_circles) {
    throw std::invalid_argument("multi-circle POC: malformed arrangement");
  }
  const double collision_radius = arr.radius + r_o;
  const CollisionDisc disc{collision_radius};
  const int per_axis = arr.circles_per_axis();

  MultiCircleBreakdown breakdown;
  breakdown.circle_terms.reserve(arr.centers.size());
  for (const Vec2& center : arr.centers) {
    const DiagGaussian2 shifted{g.mean - center, g.sigma1, g.sigma2};
    breakdown.circle_terms.push_back(poc_local_single(disc, shifted, spec).value);
  }

  const auto counts = lens_overlap_counts(arr.n_circles, arr.n_axes);
  breakdown.lens_terms.reserve(static_cast<std::size_t>(counts.n_lenses));
  for (int axis = 0; axis < arr.n_axes; ++axis) {
    for (int i = 0; i + 1 < per_axis; ++i) {
      breakdown.lens_terms.push_back(
          lens_term(arr.center(axis, i), arr.center(axis, i + 1), collision_radius, g, spec));
    }
  }
  for (int axis = 0; axis + 1 < arr.n_axes; ++axis) {
    for (int i = 0; i < per_axis; ++i) {
      breakdown.lens_terms.push_back(
          lens_term(arr.center(axis, i), arr.center(axis + 1, i), collision_radius, g, spec));
    }
  }

  if (arr.n_axes > 1) {
    for (const OverlapRegion& region : overlap_regions(arr, r_o)) {
      breakdown.overlap_terms.push_back(poc_overlap(region, g, spec));
    }
  }

  double total = 0.0;
  for (double term : breakdown.circle_terms) total += term;
  for (double term : breakdown.lens_terms) total -= term;
  for (double term : breakdown.overlap_terms) total += term;
  const std::size_t n_terms = breakdown.circle_terms.size() + breakdown.lens_terms.size() +
                              breakdown.overlap_terms.size();
  breakdown.total = clamp_probability(
      total, static_cast<double>(n_terms) * spec.abs_tol, spec, "multi-circle POC");
  return breakdown;
}

}  // namespace

MultiCircleBreakdown poc_two_circles(const CoverArrangement& arr, double r_o,
                                     const DiagGaussian2& g, const QuadratureSpec& spec) {
  if (arr.n_circles != 2 || arr.n_axes != 1) {
    throw std::invalid_argument("poc_two_circles: requires N_c = 2, N_a = 1");
  }
  return assemble(arr, r_o, g, spec);
}

MultiCircleBreakdown poc_single_axis(const CoverArrangement& arr, double r_o,
                                     const DiagGaussian2& g, const QuadratureSpec& spec) {
  if (arr.n_axes != 1 || arr.mode != CoverMode::kCover) {
    throw std::invalid_argument("poc_single_axis: requires a single-axis cover arrangement");
  }
  return assemble(arr, r_o, g, spec);
}

MultiCircleBreakdown poc_multi_axis(const CoverArrangement& arr, double r_o,
                                    const DiagGaussian2& g, const QuadratureSpec& spec) {
  if (arr.mode != CoverMode::kCover) {
    throw std::invalid_argument("poc_multi_axis: requires a cover arrangement");
  }
  if (arr.n_axes > 1 && !(arr.axis_spacing <= 2.0 * (arr.radius + r_o))) {
    throw std::invalid_argument("poc_multi_axis: axis spacing exceeds the collision diameter");
  }
  return assemble(arr, r_o, g, spec);
}

BoundsResult poc_bounds(const RectangleFootprint& rect, double r_o, const DiagGaussian2& g,
                        const QuadratureSpec& spec) {
  const MultiCircleBreakdown upper_breakdown =
      poc_two_circles(cover_arrangement(rect, 2, 1), r_o, g, spec);
  const MultiCircleBreakdown lower_breakdown =
      poc_two_circles(inscribed_two_circles(rect), r_o, g, spec);
  double lower = lower_breakdown.total;
  double upper = upper_breakdown.total;
  if (lower > upper) {
    // The enclosing regions are nested, so any inversion is quadrature noise.
    if (lower - upper > 100.0 * spec.abs_tol) {
      throw QuadratureError("poc_bounds: lower bound exceeds upper bound beyond tolerance",
                            lower, lower - upper);
    }
    lower = upper;
  }
  return {lower, upper, upper - lower};
}

}  // namespace poc
