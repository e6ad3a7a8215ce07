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

#ifndef POC_GAUSSIAN_HPP
#define POC_GAUSSIAN_HPP

#include <cstdint>
#include <vector>

#include "poc/geometry.hpp"

namespace poc {

// Bivariate normal with diagonal covariance, axis-aligned with the frame it
// is expressed in.  sigma1/sigma2 are the standard deviations along x/y.
struct DiagGaussian2 {
  Vec2 mean;
  double sigma1 = 1.0;
  double sigma2 = 1.0;
};

// Throws std::invalid_argument unless both sigmas are positive and finite
// and the mean is finite.
void validate(const DiagGaussian2& g);

struct RandomSeed {
  std::uint64_t value = 0;
};

// splitmix64; cheap, splittable by seeding with derived values, no global
// state.
class SplitMix64 {
 public:
  explicit SplitMix64(RandomSeed seed) : state_(seed.value) {}

  std::uint64_t next_u64();
  // Uniform on [0, 1), 53-bit resolution.
  double next_unit();
  // One Box-Muller pair of independent standard normal deviates.
  Vec2 next_standard_pair();

 private:
  std::uint64_t state_;
};

// Density of g at q.
double pdf(const DiagGaussian2& g, Vec2 q);

// n independent draws; bit-identical for identical (seed, n).
std::vector<Vec2> sample(const DiagGaussian2& g, RandomSeed seed, std::size_t n);

// Error function.  Absolute error below 1e-12 over the real line.
double erf(double x);

}  // namespace poc

#endif  // POC_GAUSSIAN_HPP
