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

#include "poc/poc_circle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

#include "support.hpp"

namespace poc {
namespace {

using internal::clamp_probability;
using internal::kEndpointInset;
using internal::kSigmaSupport;
using internal::kSqrt2;
using internal::kSqrt2Pi;
using internal::make_breakpoints;

struct ClippedRange {
  double lo = 0.0;
  double hi = 0.0;
  bool empty = true;
};

ClippedRange clip_to_support(double lo, double hi, double mean, double sigma) {
  const double a = std::max(lo, mean - kSigmaSupport * sigma);
  const double b = std::min(hi, mean + kSigmaSupport * sigma);
  return {a, b, !(a < b)};
}

}  // namespace

std::string to_string(PocMethod method) {
  switch (method) {
    case PocMethod::kMcs: return "mcs";
    case PocMethod::kLocalDouble: return "local-double";
    case PocMethod::kLocalSingle: return "local-single";
    case PocMethod::kGlobalDouble: return "global-double";
    case PocMethod::kGlobalSingle: return "global-single";
    case PocMethod::kPolar: return "polar";
  }
  throw std::invalid_argument("unknown PocMethod");
}

PocMethod poc_method_from_string(const std::string& name) {
  if (name == "mcs") return PocMethod::kMcs;
  if (name == "local-double") return PocMethod::kLocalDouble;
  if (name == "local-single") return PocMethod::kLocalSingle;
  if (name == "global-double") return PocMethod::kGlobalDouble;
  if (name == "global-single") return PocMethod::kGlobalSingle;
  if (name == "polar") return PocMethod::kPolar;
  throw std::invalid_argument("unknown POC method '" + name + "'");
}

CollisionDisc::CollisionDisc(double collision_radius_in) : collision_radius(collision_radius_in) {
  if (!(collision_radius > 0.0) || !std::isfinite(collision_radius)) {
    throw std::invalid_argument("collision radius must be positive");
  }
}

PocResult poc_mcs(const CollisionDisc& disc, const DiagGaussian2& g, std::size_t n_samples,
                  RandomSeed seed) {
  validate(g);
  if (n_samples < 1) throw std::invalid_argument("poc_mcs: n_samples must be at least 1");
  const double r2 = disc.collision_radius * disc.collision_radius;
  SplitMix64 rng(seed);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const Vec2 z = rng.next_standard_pair();
    const double x = g.mean.x + g.sigma1 * z.x;
    const double y = g.mean.y + g.sigma2 * z.y;
    if (x * x + y * y <= r2) ++hits;
  }
  const double p = static_cast<double>(hits) / static_cast<double>(n_samples);
  const double stderr_est = std::sqrt(p * (1.0 - p) / static_cast<double>(n_samples));
  return {p, PocMethod::kMcs, stderr_est, n_samples};
}

PocResult poc_local_single(const CollisionDisc& disc, const DiagGaussian2& g,
                           const QuadratureSpec& spec) {
  validate(g);
  const double radius = disc.collision_radius;
  const auto range = clip_to_support(-radius, radius, g.mean.y, g.sigma2);
  if (range.empty) return {0.0, PocMethod::kLocalSingle, 0.0, 0};

  const double inset = radius * (1.0 - kEndpointInset);
  const double mu1 = g.mean.x;
  const double mu2 = g.mean.y;
  const double sigma2 = g.sigma2;
  const auto bps = make_breakpoints(
      range.lo, range.hi,
      {-inset, inset, mu2 - 2.0 * sigma2, mu2, mu2 + 2.0 * sigma2});
  const double r2 = radius * radius;
  const double inv_s1 = 1.0 / (g.sigma1 * kSqrt2);
  const double prefactor = 1.0 / (2.0 * kSqrt2Pi * g.sigma2);

  const auto est = integrate_segments(
      [=](double c2) {
        const double half_chord = std::sqrt(std::max(0.0, r2 - c2 * c2));
        const double z = (c2 - mu2) / sigma2;
        return prefactor * std::exp(-0.5 * z * z) *
               (std::erf((half_chord - mu1) * inv_s1) + std::erf((half_chord + mu1) * inv_s1));
      },
      bps, spec);
  return {clamp_probability(est.value, est.error, spec, "poc_local_single"),
          PocMethod::kLocalSingle, est.error, 0};
}

PocResult poc_local_double(const CollisionDisc& disc, const DiagGaussian2& g,
                           const QuadratureSpec& spec) {
  validate(g);
  const double radius = disc.collision_radius;
  const auto range = clip_to_support(-radius, radius, g.mean.y, g.sigma2);
  if (range.empty) return {0.0, PocMethod::kLocalDouble, 0.0, 0};

  const double inset = radius * (1.0 - kEndpointInset);
  const double mu1 = g.mean.x;
  const double mu2 = g.mean.y;
  const double s1 = g.sigma1;
  const double s2 = g.sigma2;
  const auto bps = make_breakpoints(range.lo, range.hi,
                                    {-inset, inset, mu2 - 2.0 * s2, mu2, mu2 + 2.0 * s2});
  const double r2 = radius * radius;
  const double norm = 1.0 / (2.0 * std::numbers::pi * g.sigma1 * g.sigma2);

  const auto est = integrate_2d_segments(
      [=](double c2, double c1) {
        const double z1 = (c1 - mu1) / s1;
        const double z2 = (c2 - mu2) / s2;
        return norm * std::exp(-0.5 * (z1 * z1 + z2 * z2));
      },
      bps,
      [=](double c2) {
        const double half_chord = std::sqrt(std::max(0.0, r2 - c2 * c2));
        const auto inner = clip_to_support(-half_chord, half_chord, mu1, s1);
        if (inner.empty) return std::pair{0.0, 0.0};
        return std::pair{inner.lo, inner.hi};
      },
      spec);
  return {clamp_probability(est.value, est.error, spec, "poc_local_double"),
          PocMethod::kLocalDouble, est.error, 0};
}

PocResult poc_global_single(const CollisionDisc& disc, Vec2 ego_pos, Vec2 obj_mean_global,
                            double sigma1, double sigma2, const QuadratureSpec& spec) {
  const DiagGaussian2 global_density{obj_mean_global, sigma1, sigma2};
  validate(global_density);
  const double radius = disc.collision_radius;
  const double mu2 = obj_mean_global.y - ego_pos.y;
  const auto range =
      clip_to_support(ego_pos.y - radius, ego_pos.y + radius, obj_mean_global.y, sigma2);
  if (range.empty) return {0.0, PocMethod::kGlobalSingle, 0.0, 0};

  const double inset = radius * (1.0 - kEndpointInset);
  const double obj_y = obj_mean_global.y;
  const auto bps = make_breakpoints(range.lo, range.hi,
                                    {ego_pos.y - inset, ego_pos.y + inset,
                                     obj_y - 2.0 * sigma2, obj_y, obj_y + 2.0 * sigma2});
  const double r2 = radius * radius;
  const double inv_s1 = 1.0 / (sigma1 * kSqrt2);
  const double prefactor = 1.0 / (2.0 * kSqrt2Pi * sigma2);
  const double ego_x = ego_pos.x;
  const double ego_y = ego_pos.y;
  const double obj_x = obj_mean_global.x;

  const auto est = integrate_segments(
      [=](double c2_hat) {
        const double local_c2 = c2_hat - ego_y;
        const double half_chord = std::sqrt(std::max(0.0, r2 - local_c2 * local_c2));
        const double z = (local_c2 - mu2) / sigma2;
        return prefactor * std::exp(-0.5 * z * z) *
               (std::erf((ego_x - obj_x + half_chord) * inv_s1) +
                std::erf((obj_x - ego_x + half_chord) * inv_s1));
      },
      bps, spec);
  return {clamp_probability(est.value, est.error, spec, "poc_global_single"),
          PocMethod::kGlobalSingle, est.error, 0};
}

PocResult poc_global_double(const CollisionDisc& disc, Vec2 ego_pos, Vec2 obj_mean_global,
                            double sigma1, double sigma2, const QuadratureSpec& spec) {
  const DiagGaussian2 global_density{obj_mean_global, sigma1, sigma2};
  validate(global_density);
  const double radius = disc.collision_radius;
  const auto range =
      clip_to_support(ego_pos.y - radius, ego_pos.y + radius, obj_mean_global.y, sigma2);
  if (range.empty) return {0.0, PocMethod::kGlobalDouble, 0.0, 0};

  const double inset = radius * (1.0 - kEndpointInset);
  const double obj_y = obj_mean_global.y;
  const auto bps = make_breakpoints(range.lo, range.hi,
                                    {ego_pos.y - inset, ego_pos.y + inset,
                                     obj_y - 2.0 * sigma2, obj_y, obj_y + 2.0 * sigma2});
  const double r2 = radius * radius;
  const double norm = 1.0 / (2.0 * std::numbers::pi * sigma1 * sigma2);
  const double ego_x = ego_pos.x;
  const double ego_y = ego_pos.y;
  const double obj_x = obj_mean_global.x;

  const auto est = integrate_2d_segments(
      [=](double c2_hat, double c1_hat) {
        const double z1 = (c1_hat - obj_x) / sigma1;
        const double z2 = (c2_hat - obj_y) / sigma2;
        return norm * std::exp(-0.5 * (z1 * z1 + z2 * z2));
      },
      bps,
      [=](double c2_hat) {
        const double local_c2 = c2_hat - ego_y;
        const double half_chord = std::sqrt(std::max(0.0, r2 - local_c2 * local_c2));
        const auto inner =
            clip_to_support(ego_x - half_chord, ego_x + half_chord, obj_x, sigma1);
        if (inner.empty) return std::pair{0.0, 0.0};
        return std::pair{inner.lo, inner.hi};
      },
      spec);
  return {clamp_probability(est.value, est.error, spec, "poc_global_double"),
          PocMethod::kGlobalDouble, est.error, 0};
}

PocResult poc_polar(const CollisionDisc& disc, const DiagGaussian2& g,
                    const QuadratureSpec& spec) {
  validate(g);
  const double radius = disc.collision_radius;
  // Mean expressed in polar form; the identities d_mu cos(mu_phi) = mu1 and
  // d_mu sin(mu_phi) = mu2 recover the Cartesian components.
  const double d_mu = std::hypot(g.mean.x, g.mean.y);
  const double mu_phi = std::atan2(g.mean.y, g.mean.x);
  const double mc1 = d_mu * std::cos(mu_phi);
  const double mc2 = d_mu * std::sin(mu_phi);
  const double norm = 1.0 / (2.0 * std::numbers::pi * g.sigma1 * g.sigma2);
  const double s1 = g.sigma1;
  const double s2 = g.sigma2;

  const auto est = integrate_2d(
      [=](double rho, double phi) {
        const double z1 = (rho * std::cos(phi) - mc1) / s1;
        const double z2 = (rho * std::sin(phi) - mc2) / s2;
        return rho * norm * std::exp(-0.5 * (z1 * z1 + z2 * z2));
      },
      0.0, radius, 0.0, 2.0 * std::numbers::pi, spec);
  return {clamp_probability(est.value, est.error, spec, "poc_polar"), PocMethod::kPolar,
          est.error, 0};
}

}  // namespace poc
