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

#ifndef POC_GEOMETRY_HPP
#define POC_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <vector>

namespace poc {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend constexpr Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
  friend constexpr bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }
inline constexpr double squared_norm(Vec2 v) { return v.x * v.x + v.y * v.y; }

// Planar pose; heading is normalized into [0, 2*pi) at construction.
struct Pose {
  Pose() = default;
  Pose(Vec2 position_in, double heading_in);

  Vec2 position;
  double heading = 0.0;
};

// Closed disc, radius > 0.
struct Circle {
  Circle(Vec2 center_in, double radius_in);

  Vec2 center;
  double radius;
};

// Axis-aligned vehicle footprint in its body frame, length > width > 0.
// The body frame has its origin at the rectangle center and the x axis
// along the length (the heading direction).
struct RectangleFootprint {
  RectangleFootprint(double length_in, double width_in);

  double length;
  double width;
};

enum class CoverMode { kCover, kInscribed };

// A grid of equal-radius circles approximating the rectangle: n_axes rows
// parallel to the body x axis, n_circles/n_axes circles per row.  In cover
// mode the union of the circles contains the rectangle; in inscribed mode
// every circle lies inside it.
//
// Centers are listed row-major: axes bottom to top, and within each axis
// front (largest x) to back.
struct CoverArrangement {
  int n_circles = 0;
  int n_axes = 0;
  double radius = 0.0;         // r_e
  double axial_spacing = 0.0;  // d_c, between consecutive same-axis centers
  double axis_spacing = 0.0;   // d_a, between adjacent axes
  std::vector<Vec2> centers;
  CoverMode mode = CoverMode::kCover;

  int circles_per_axis() const { return n_circles / n_axes; }
  // Center of circle `i` (front to back) on axis `a` (bottom to top).
  const Vec2& center(int axis, int i) const { return centers[axis * circles_per_axis() + i]; }
};

// Smallest-radius covering grid for the rectangle: each of the n_axes rows
// covers a length x width/n_axes sub-rectangle with n_circles/n_axes
// circles of radius sqrt((l/(2N))^2 + (w'/2)^2), spaced d_c = l/N apart.
CoverArrangement cover_arrangement(const RectangleFootprint& rect, int n_circles, int n_axes);

// Two circles of radius width/2 centered (+-(l-w)/2, 0), fully contained in
// the rectangle.
CoverArrangement inscribed_two_circles(const RectangleFootprint& rect);

// True iff the discs around q_e and q_o intersect; tangency counts.
bool collision_indicator(Vec2 q_e, Vec2 q_o, double r_e, double r_o);

// True iff the oriented rectangle footprint at `ego` intersects the disc
// `obj`; tangency counts.
bool rectangle_circle_indicator(const Pose& ego, const RectangleFootprint& rect, const Circle& obj);

// Intersection of two discs of common radius R = r_e + r_o whose centers are
// d_c apart along `axis_unit` ((1,0) or (0,1)).  half_height is the lens
// half-extent perpendicular to the axis.
struct LensGeometry {
  Vec2 midpoint;
  Vec2 axis_unit;
  double collision_radius = 0.0;  // R
  double center_spacing = 0.0;    // d_c
  double half_height = 0.0;       // d2 = sqrt(R^2 - d_c^2/4)
};

LensGeometry lens_geometry(double r_e, double r_o, double d_c, Vec2 midpoint, Vec2 axis_unit);

// Half-extent of the lens along its axis at perpendicular offset t from the
// midpoint, sqrt(R^2 - t^2) - d_c/2.  Requires |t| <= half_height.
double lens_half_width(const LensGeometry& lens, double t);

// Intersection of the four collision discs of a 2x2 block of grid-adjacent
// circle centers (two consecutive on each of two adjacent axes).
struct OverlapRegion {
  std::array<Vec2, 4> centers;
  double collision_radius = 0.0;
};

// All quadruple-overlap regions of a cover arrangement for an object of
// radius r_o; empty when n_axes == 1.  Ordered by axis pair, then position.
std::vector<OverlapRegion> overlap_regions(const CoverArrangement& arr, double r_o);

}  // namespace poc

#endif  // POC_GEOMETRY_HPP
