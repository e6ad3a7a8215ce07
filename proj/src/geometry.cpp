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

#include "poc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace poc {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_heading(double heading) {
  if (!std::isfinite(heading)) throw std::invalid_argument("pose heading must be finite");
  double h = std::fmod(heading, kTwoPi);
  if (h < 0.0) h += kTwoPi;
  if (h >= kTwoPi) h = 0.0;  // fmod rounding at the seam
  return h;
}

void check_finite(Vec2 v, const char* what) {
  if (!std::isfinite(v.x) || !std::isfinite(v.y)) throw std::invalid_argument(what);
}

}  // namespace

Pose::Pose(Vec2 position_in, double heading_in)
    : position(position_in), heading(wrap_heading(heading_in)) {
  check_finite(position, "pose position must be finite");
}

Circle::Circle(Vec2 center_in, double radius_in) : center(center_in), radius(radius_in) {
  check_finite(center, "circle center must be finite");
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw std::invalid_argument("circle radius must be positive");
  }
}

RectangleFootprint::RectangleFootprint(double length_in, double width_in)
    : length(length_in), width(width_in) {
  if (!std::isfinite(length) || !std::isfinite(width) || !(length > width) || !(width > 0.0)) {
    throw std::invalid_argument("rectangle footprint requires length > width > 0");
  }
}

CoverArrangement cover_arrangement(const RectangleFootprint& rect, int n_circles, int n_axes) {
  if (n_circles < 1 || n_axes < 1) {
    throw std::invalid_argument("cover_arrangement: counts must be positive");
  }
  if (n_circles % n_axes != 0) {
    throw std::invalid_argument("cover_arrangement: n_circles must be divisible by n_axes");
  }
  const int per_axis = n_circles / n_axes;
  const double sub_width = rect.width / n_axes;
  const double radius = std::hypot(rect.length / (2.0 * per_axis), sub_width / 2.0);
  const double axial_spacing = rect.length / per_axis;  // = 2 sqrt(r_e^2 - w'^2/4)

  CoverArrangement arr;
  arr.n_circles = n_circles;
  arr.n_axes = n_axes;
  arr.radius = radius;
  arr.axial_spacing = axial_spacing;
  arr.axis_spacing = sub_width;
  arr.mode = CoverMode::kCover;
  arr.centers.reserve(static_cast<std::size_t>(n_circles));
  for (int axis = 0; axis < n_axes; ++axis) {
    const double y = -rect.width / 2.0 + (axis + 0.5) * sub_width;
    for (int i = 0; i < per_axis; ++i) {
      const double x = rect.length / 2.0 - (i + 0.5) * axial_spacing;
      arr.centers.push_back({x, y});
    }
  }
  return arr;
}

CoverArrangement inscribed_two_circles(const RectangleFootprint& rect) {
  const double spacing = rect.length - rect.width;
  if (!(spacing > 0.0)) {
    throw std::invalid_argument("inscribed_two_circles: requires length > width");
  }
  CoverArrangement arr;
  arr.n_circles = 2;
  arr.n_axes = 1;
  arr.radius = rect.width / 2.0;
  arr.axial_spacing = spacing;
  arr.axis_spacing = rect.width;
  arr.mode = CoverMode::kInscribed;
  arr.centers = {{spacing / 2.0, 0.0}, {-spacing / 2.0, 0.0}};
  return arr;
}

bool collision_indicator(Vec2 q_e, Vec2 q_o, double r_e, double r_o) {
  if (!(r_e > 0.0) || !(r_o > 0.0)) {
    throw std::invalid_argument("collision_indicator: radii must be positive");
  }
  const double reach = r_e + r_o;
  return squared_norm(q_e - q_o) <= reach * reach;
}

bool rectangle_circle_indicator(const Pose& ego, const RectangleFootprint& rect,
                                const Circle& obj) {
  // Object center in the ego body frame.
  const double c = std::cos(ego.heading);
  const double s = std::sin(ego.heading);
  const Vec2 d = obj.center - ego.position;
  const Vec2 local{c * d.x + s * d.y, -s * d.x + c * d.y};
  const double dx = std::abs(local.x) - rect.length / 2.0;
  const double dy = std::abs(local.y) - rect.width / 2.0;
  const double gap_x = std::max(dx, 0.0);
  const double gap_y = std::max(dy, 0.0);
  return gap_x * gap_x + gap_y * gap_y <= obj.radius * obj.radius;
}

LensGeometry lens_geometry(double r_e, double r_o, double d_c, Vec2 midpoint, Vec2 axis_unit) {
  if (!(r_e > 0.0) || !(r_o > 0.0)) {
    throw std::invalid_argument("lens_geometry: radii must be positive");
  }
  const double collision_radius = r_e + r_o;
  if (!(d_c > 0.0) || !(d_c < 2.0 * collision_radius)) {
    throw std::invalid_argument("lens_geometry: requires 0 < d_c < 2(r_e + r_o)");
  }
  const bool along_x = axis_unit.x == 1.0 && axis_unit.y == 0.0;
  const bool along_y = axis_unit.x == 0.0 && axis_unit.y == 1.0;
  if (!along_x && !along_y) {
    throw std::invalid_argument("lens_geometry: axis_unit must be (1,0) or (0,1)");
  }
  check_finite(midpoint, "lens_geometry: midpoint must be finite");
  LensGeometry lens;
  lens.midpoint = midpoint;
  lens.axis_unit = axis_unit;
  lens.collision_radius = collision_radius;
  lens.center_spacing = d_c;
  lens.half_height = std::sqrt(collision_radius * collision_radius - d_c * d_c / 4.0);
  return lens;
}

double lens_half_width(const LensGeometry& lens, double t) {
  if (std::abs(t) > lens.half_height) {
    throw std::invalid_argument("lens_half_width: |t| exceeds the lens half height");
  }
  const double r2 = lens.collision_radius * lens.collision_radius;
  return std::sqrt(std::max(0.0, r2 - t * t)) - lens.center_spacing / 2.0;
}

std::vector<OverlapRegion> overlap_regions(const CoverArrangement& arr, double r_o) {
  if (arr.mode != CoverMode::kCover) {
    throw std::invalid_argument("overlap_regions: requires a cover arrangement");
  }
  if (!(r_o > 0.0)) throw std::invalid_argument("overlap_regions: r_o must be positive");
  const int per_axis = arr.circles_per_axis();
  std::vector<OverlapRegion> regions;
  regions.reserve(static_cast<std::size_t>(std::max(0, (per_axis - 1) * (arr.n_axes - 1))));
  for (int axis = 0; axis + 1 < arr.n_axes; ++axis) {
    for (int i = 0; i + 1 < per_axis; ++i) {
      OverlapRegion region;
      region.centers = {arr.center(axis, i), arr.center(axis, i + 1), arr.center(axis + 1, i),
                        arr.center(axis + 1, i + 1)};
      region.collision_radius = arr.radius + r_o;
      regions.push_back(region);
    }
  }
  return regions;
}

}  // namespace poc
