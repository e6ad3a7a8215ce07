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

#ifndef POC_POC_MULTICIRCLE_HPP
#define POC_POC_MULTICIRCLE_HPP

#include <vector>

#include "poc/gaussian.hpp"
#include "poc/geometry.hpp"
#include "poc/quadrature.hpp"

namespace poc {

struct LensOverlapCounts {
  int n_lenses = 0;    // N_l = N_c (2 - 1/N_a) - N_a
  int n_overlaps = 0;  // N_o = (N_c/N_a - 1)(N_a - 1)
};

LensOverlapCounts lens_overlap_counts(int n_circles, int n_axes);

// Probability mass of the lens (intersection of the two collision discs);
// the Gaussian is expressed in the ego frame.
double poc_lens(const LensGeometry& lens, const DiagGaussian2& g, const QuadratureSpec& spec = {});

// Probability mass of the quadruple overlap (intersection of four collision
// discs); the Gaussian is expressed in the ego frame.
double poc_overlap(const OverlapRegion& region, const DiagGaussian2& g,
                   const QuadratureSpec& spec = {});

// Signed inclusion-exclusion decomposition of a multi-circle POC:
// total = sum(circle_terms) - sum(lens_terms) + sum(overlap_terms).
// Term counts always match lens_overlap_counts; lenses between disjoint
// discs contribute 0.
struct MultiCircleBreakdown {
  std::vector<double> circle_terms;
  std::vector<double> lens_terms;
  std::vector<double> overlap_terms;
  double total = 0.0;
};

// Two-circle arrangement (cover or inscribed): P{A1} + P{A2} - P{lens}.
MultiCircleBreakdown poc_two_circles(const CoverArrangement& arr, double r_o,
                                     const DiagGaussian2& g, const QuadratureSpec& spec = {});

// Single-axis cover arrangement: N_c circle terms minus N_c - 1 lens terms.
MultiCircleBreakdown poc_single_axis(const CoverArrangement& arr, double r_o,
                                     const DiagGaussian2& g, const QuadratureSpec& spec = {});

// General grid cover arrangement: circle terms, minus same-axis and
// cross-axis lens terms, plus quadruple-overlap terms.
MultiCircleBreakdown poc_multi_axis(const CoverArrangement& arr, double r_o,
                                    const DiagGaussian2& g, const QuadratureSpec& spec = {});

// Upper/lower POC bounds from the two-circle cover and inscribed
// arrangements of the rectangle; delta = upper - lower.
struct BoundsResult {
  double lower = 0.0;
  double upper = 0.0;
  double delta = 0.0;
};

BoundsResult poc_bounds(const RectangleFootprint& rect, double r_o, const DiagGaussian2& g,
                        const QuadratureSpec& spec = {});

}  // namespace poc

#endif  // POC_POC_MULTICIRCLE_HPP
