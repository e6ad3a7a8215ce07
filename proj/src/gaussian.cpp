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

#include "poc/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace poc {

void validate(const DiagGaussian2& g) {
  if (!std::isfinite(g.mean.x) || !std::isfinite(g.mean.y)) {
    throw std::invalid_argument("gaussian mean must be finite");
  }
  if (!(g.sigma1 > 0.0) || !(g.sigma2 > 0.0) || !std::isfinite(g.sigma1) ||
      !std::isfinite(g.sigma2)) {
    throw std::invalid_argument("gaussian sigmas must be positive and finite");
  }
}

std::uint64_t SplitMix64::next_u64() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_unit() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

Vec2 SplitMix64::next_standard_pair() {
  // Box-Muller; u1 shifted into (0, 1] so the logarithm is finite.
  const double u1 = 1.0 - next_unit();
  const double u2 = next_unit();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(a), r * std::sin(a)};
}

double pdf(const DiagGaussian2& g, Vec2 q) {
  validate(g);
  const double z1 = (q.x - g.mean.x) / g.sigma1;
  const double z2 = (q.y - g.mean.y) / g.sigma2;
  return std::exp(-0.5 * (z1 * z1 + z2 * z2)) /
         (2.0 * std::numbers::pi * g.sigma1 * g.sigma2);
}

std::vector<Vec2> sample(const DiagGaussian2& g, RandomSeed seed, std::size_t n) {
  validate(g);
  if (n < 1) throw std::invalid_argument("sample: n must be at least 1");
  SplitMix64 rng(seed);
  std::vector<Vec2> draws;
  draws.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 z = rng.next_standard_pair();
    draws.push_back({g.mean.x + g.sigma1 * z.x, g.mean.y + g.sigma2 * z.y});
  }
  return draws;
}

double erf(double x) { return std::erf(x); }

}  // namespace poc
