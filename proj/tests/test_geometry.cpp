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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <doctest.h>

#include "oracles.hpp"
#include "poc/geometry.hpp"

using namespace poc;

namespace {

// Zero-miss coverage check: uniform points in the rectangle must all lie in
// the circle union.
int coverage_misses(const RectangleFootprint& rect, const CoverArrangement& arr,
                    int n_points, std::uint64_t seed) {
  oracle::TestRng rng(seed);
  int misses = 0;
  for (int i = 0; i < n_points; ++i) {
    const Vec2 p{rng.uniform(-rect.length / 2, rect.length / 2),
                 rng.uniform(-rect.width / 2, rect.width / 2)};
    if (!oracle::in_disc_union(p, arr.centers, arr.radius)) ++misses;
  }
  return misses;
}

int inscription_misses(const RectangleFootprint& rect, const CoverArrangement& arr,
                       int n_points, std::uint64_t seed) {
  oracle::TestRng rng(seed);
  int misses = 0;
  const double tol = 1e-12;
  for (int i = 0; i < n_points; ++i) {
    for (const Vec2& c : arr.centers) {
      const double phi = rng.uniform(0.0, 2.0 * std::numbers::pi);
      const Vec2 p{c.x + arr.radius * std::cos(phi), c.y + arr.radius * std::sin(phi)};
      if (std::abs(p.x) > rect.length / 2 + tol || std::abs(p.y) > rect.width / 2 + tol) {
        ++misses;
      }
    }
  }
  return misses;
}

}  // namespace

TEST_CASE("rectangle footprint validation") {
  CHECK_THROWS_AS(RectangleFootprint(2.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(RectangleFootprint(1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(RectangleFootprint(4.5, 0.0), std::invalid_argument);
}

TEST_CASE("pose heading normalization") {
  CHECK(Pose({0, 0}, -std::numbers::pi).heading == doctest::Approx(std::numbers::pi));
  CHECK(Pose({0, 0}, 2 * std::numbers::pi).heading == doctest::Approx(0.0));
  CHECK(Pose({0, 0}, 7.0).heading == doctest::Approx(7.0 - 2 * std::numbers::pi));
}

TEST_CASE("cover arrangement: two circles on one axis") {
  const RectangleFootprint rect(4.5, 2.0);
  const auto arr = cover_arrangement(rect, 2, 1);
  CHECK(arr.radius == doctest::Approx(1.505199322349037).epsilon(1e-12));
  CHECK(arr.axial_spacing == doctest::Approx(2.25).epsilon(1e-12));
  REQUIRE(arr.centers.size() == 2);
  CHECK(arr.centers[0].x == doctest::Approx(1.125));
  CHECK(arr.centers[0].y == doctest::Approx(0.0));
  CHECK(arr.centers[1].x == doctest::Approx(-1.125));
  // Spacing identity d_c = 2 sqrt(r_e^2 - w'^2/4).
  CHECK(arr.axial_spacing ==
        doctest::Approx(2 * std::sqrt(arr.radius * arr.radius - 1.0)).epsilon(1e-12));
  CHECK(coverage_misses(rect, arr, 100000, 11) == 0);
}

TEST_CASE("cover arrangement: single circle degenerates to the circumcircle") {
  const RectangleFootprint rect(4.5, 2.0);
  const auto arr = cover_arrangement(rect, 1, 1);
  CHECK(arr.radius == doctest::Approx(2.462214450449026).epsilon(1e-12));
  REQUIRE(arr.centers.size() == 1);
  CHECK(arr.centers[0].x == doctest::Approx(0.0));
  CHECK(arr.centers[0].y == doctest::Approx(0.0));
  CHECK(coverage_misses(rect, arr, 100000, 12) == 0);
}

TEST_CASE("cover arrangement: six circles on two axes") {
  const RectangleFootprint rect(4.5, 2.0);
  const auto arr = cover_arrangement(rect, 6, 2);
  CHECK(arr.circles_per_axis() == 3);
  CHECK(arr.axis_spacing == doctest::Approx(1.0));
  CHECK(arr.axial_spacing == doctest::Approx(1.5));
  // Sub-rectangles are 4.5 x 1, so each circle must reach the corner of a
  // 1.5 x 1 cell.
  CHECK(arr.radius == doctest::Approx(std::hypot(0.75, 0.5)).epsilon(1e-12));
  REQUIRE(arr.centers.size() == 6);
  CHECK(arr.center(0, 0).y == doctest::Approx(-0.5));
  CHECK(arr.center(1, 0).y == doctest::Approx(0.5));
  CHECK(arr.center(0, 0).x == doctest::Approx(1.5));
  CHECK(arr.center(0, 1).x == doctest::Approx(0.0));
  CHECK(arr.center(0, 2).x == doctest::Approx(-1.5));
  CHECK(coverage_misses(rect, arr, 100000, 13) == 0);
}

TEST_CASE("cover spacing never exceeds the collision diameter") {
  oracle::TestRng rng(14);
  const std::pair<int, int> shapes[] = {{1, 1}, {2, 1}, {4, 1}, {6, 2}, {4, 4}};
  for (int i = 0; i < 100; ++i) {
    const double w = rng.uniform(0.5, 4.0);
    const double l = w + rng.uniform(0.2, 6.0);
    const auto [n_circles, n_axes] = shapes[i % std::size(shapes)];
    const auto arr = cover_arrangement(RectangleFootprint{l, w}, n_circles, n_axes);
    const double r_o = rng.uniform(1e-6, 3.0);
    CHECK(arr.axial_spacing <= 2.0 * (arr.radius + r_o));
    CHECK(arr.axial_spacing < 2.0 * arr.radius);  // already true without the object
  }
}

TEST_CASE("cover arrangement rejects bad shapes") {
  const RectangleFootprint rect(4.5, 2.0);
  CHECK_THROWS_AS(cover_arrangement(rect, 5, 2), std::invalid_argument);
  CHECK_THROWS_AS(cover_arrangement(rect, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(cover_arrangement(rect, 2, 0), std::invalid_argument);
}

TEST_CASE("inscribed two circles") {
  const RectangleFootprint rect(4.5, 2.0);
  const auto arr = inscribed_two_circles(rect);
  CHECK(arr.radius == doctest::Approx(1.0));
  CHECK(arr.axial_spacing == doctest::Approx(2.5));
  CHECK(arr.mode == CoverMode::kInscribed);
  CHECK(inscription_misses(rect, arr, 50000, 21) == 0);

  // Nearly square footprint: circles almost coincide.
  const RectangleFootprint squarish(2.0 + 1e-9, 2.0);
  const auto tight = inscribed_two_circles(squarish);
  CHECK(tight.radius == doctest::Approx(1.0));
  CHECK(tight.axial_spacing == doctest::Approx(1e-9).epsilon(1e-3));
}

TEST_CASE("collision indicator includes the boundary") {
  CHECK(collision_indicator({0, 0}, {0, 0}, 1.0, 1.0));
  CHECK(collision_indicator({0, 0}, {3, 4}, 2.0, 3.0));          // distance exactly 5
  CHECK(!collision_indicator({0, 0}, {5.0 + 1e-9, 0}, 2.5, 2.5));
  // Symmetry in the two circles.
  oracle::TestRng rng(31);
  for (int i = 0; i < 200; ++i) {
    const Vec2 a{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const Vec2 b{rng.uniform(-5, 5), rng.uniform(-5, 5)};
    const double ra = rng.uniform(0.1, 3.0), rb = rng.uniform(0.1, 3.0);
    CHECK(collision_indicator(a, b, ra, rb) == collision_indicator(b, a, rb, ra));
  }
}

TEST_CASE("rectangle-circle indicator basics") {
  const RectangleFootprint rect(4.5, 2.0);
  const Pose origin({0, 0}, 0.0);
  CHECK(rectangle_circle_indicator(origin, rect, Circle({0, 0}, 0.5)));
  // Touching the long side from outside.
  CHECK(rectangle_circle_indicator(origin, rect, Circle({0, 1.0 + 2.0}, 2.0)));
  CHECK(!rectangle_circle_indicator(origin, rect, Circle({0, 1.0 + 2.0 + 1e-9}, 2.0)));
}

TEST_CASE("rectangle-circle indicator agrees with a boundary-sampling oracle") {
  const RectangleFootprint rect(4.5, 2.0);
  oracle::TestRng rng(41);
  constexpr int kBoundarySamples = 4000;
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const Pose ego({rng.uniform(-3, 3), rng.uniform(-3, 3)}, rng.uniform(0, 2 * std::numbers::pi));
    const Circle obj({rng.uniform(-8, 8), rng.uniform(-8, 8)}, rng.uniform(0.2, 3.0));

    // Oracle: object center inside the rotated rectangle, or within the
    // radius of a densely sampled boundary point.
    const double c = std::cos(ego.heading), s = std::sin(ego.heading);
    const Vec2 d = obj.center - ego.position;
    const Vec2 local{c * d.x + s * d.y, -s * d.x + c * d.y};
    const bool inside =
        std::abs(local.x) <= rect.length / 2 && std::abs(local.y) <= rect.width / 2;
    double min_dist = 1e300;
    for (int k = 0; k < kBoundarySamples; ++k) {
      const double frac = (k + 0.5) / (kBoundarySamples / 4);
      const int side = k / (kBoundarySamples / 4);
      const double along = frac - side;
      Vec2 p;
      switch (side) {
        case 0: p = {rect.length * (along - 0.5), -rect.width / 2}; break;
        case 1: p = {rect.length * (along - 0.5), rect.width / 2}; break;
        case 2: p = {-rect.length / 2, rect.width * (along - 0.5)}; break;
        default: p = {rect.length / 2, rect.width * (along - 0.5)}; break;
      }
      min_dist = std::min(min_dist, norm(p - local));
    }
    const bool oracle_hit = inside || min_dist <= obj.radius;
    // Skip cases closer to the decision boundary than the sampling pitch.
    if (!inside && std::abs(min_dist - obj.radius) < 5e-3) continue;
    ++checked;
    CHECK(rectangle_circle_indicator(ego, rect, obj) == oracle_hit);
  }
  CHECK(checked > 300);
}

TEST_CASE("lens geometry") {
  const auto lens = lens_geometry(1.5052, 2.0, 2.25, {0, 0}, {1, 0});
  CHECK(lens.collision_radius == doctest::Approx(3.5052).epsilon(1e-12));
  CHECK(lens.half_height == doctest::Approx(3.319759334650631).epsilon(1e-9));

  const auto sym = lens_geometry(1.0, 1.0, 2.0, {0, 0}, {0, 1});
  CHECK(sym.half_height == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

  // d_c close to 2R collapses the lens to a point.
  const auto sliver = lens_geometry(1.0, 1.0, 4.0 - 1e-9, {0, 0}, {1, 0});
  CHECK(sliver.half_height < 1e-4);
  CHECK_THROWS_AS(lens_geometry(1.0, 1.0, 4.0, {0, 0}, {1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(lens_geometry(1.0, 1.0, 2.0, {0, 0}, {0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("lens half width") {
  const auto lens = lens_geometry(1.5052, 2.0, 2.25, {0, 0}, {1, 0});
  CHECK(lens_half_width(lens, 0.0) == doctest::Approx(2.3802).epsilon(1e-12));
  CHECK(lens_half_width(lens, lens.half_height) == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(lens_half_width(lens, -lens.half_height) == doctest::Approx(0.0).epsilon(1e-9));

  const auto unit = lens_geometry(1.0, 1.0, 2.0, {0, 0}, {1, 0});
  CHECK(lens_half_width(unit, std::sqrt(3.0) / 2) ==
        doctest::Approx(0.8027756377319946).epsilon(1e-12));
  CHECK_THROWS_AS(lens_half_width(unit, 2.0), std::invalid_argument);

  // Monotonically decreasing in |t|.
  double prev = lens_half_width(lens, 0.0);
  for (int k = 1; k <= 50; ++k) {
    const double t = lens.half_height * (k / 50.0);
    const double v = lens_half_width(lens, t);
    CHECK(v <= prev + 1e-12);
    prev = v;
  }
}

TEST_CASE("overlap regions enumeration") {
  const RectangleFootprint rect(4.5, 2.0);
  CHECK(overlap_regions(cover_arrangement(rect, 2, 1), 2.0).empty());

  const auto arr = cover_arrangement(rect, 6, 2);
  const auto regions = overlap_regions(arr, 2.0);
  REQUIRE(regions.size() == 2);
  for (const auto& region : regions) {
    CHECK(region.collision_radius == doctest::Approx(arr.radius + 2.0));
    // Two distinct x positions, two distinct y positions.
    CHECK(std::abs(region.centers[0].x - region.centers[1].x) == doctest::Approx(1.5));
    CHECK(std::abs(region.centers[0].y - region.centers[2].y) == doctest::Approx(1.0));
  }
}
