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

#ifndef POC_POC_CIRCLE_HPP
#define POC_POC_CIRCLE_HPP

#include <cstdint>
#include <string>

#include "poc/gaussian.hpp"
#include "poc/geometry.hpp"
#include "poc/quadrature.hpp"

namespace poc {

enum class PocMethod {
  kMcs,
  kLocalDouble,
  kLocalSingle,
  kGlobalDouble,
  kGlobalSingle,
  kPolar,
};

// Canonical serialized names: "mcs", "local-double", "local-single",
// "global-double", "global-single", "polar".
std::string to_string(PocMethod method);
PocMethod poc_method_from_string(const std::string& name);

// Disc of object-center positions colliding with one ego circle,
// R = r_e + r_o, centered at the ego circle center.
struct CollisionDisc {
  explicit CollisionDisc(double collision_radius_in);

  double collision_radius;  // R
};

struct PocResult {
  double value = 0.0;
  PocMethod method = PocMethod::kMcs;
  double error_estimate = 0.0;
  std::uint64_t samples_used = 0;  // MCS only
};

// Monte Carlo estimate: fraction of draws from g landing inside the disc;
// the error estimate is the binomial standard error sqrt(p(1-p)/n).
// g is expressed in the frame of the disc (disc centered at the origin).
PocResult poc_mcs(const CollisionDisc& disc, const DiagGaussian2& g, std::size_t n_samples,
                  RandomSeed seed);

// Nested quadrature of the density over the disc: outer c2 in [-R, R],
// inner c1 in +-sqrt(R^2 - c2^2).
PocResult poc_local_double(const CollisionDisc& disc, const DiagGaussian2& g,
                           const QuadratureSpec& spec = {});

// Single quadrature after solving the inner integral in closed form
// (Gaussian weight times a pair of erf terms).
PocResult poc_local_single(const CollisionDisc& disc, const DiagGaussian2& g,
                           const QuadratureSpec& spec = {});

// Offset-circle form in global coordinates: the disc sits at ego_pos and the
// object position is Gaussian about obj_mean_global with the given sigmas.
// The global frame must be axis-aligned with the ego frame.
PocResult poc_global_single(const CollisionDisc& disc, Vec2 ego_pos, Vec2 obj_mean_global,
                            double sigma1, double sigma2, const QuadratureSpec& spec = {});

PocResult poc_global_double(const CollisionDisc& disc, Vec2 ego_pos, Vec2 obj_mean_global,
                            double sigma1, double sigma2, const QuadratureSpec& spec = {});

// Polar transform: rho in [0, R], phi in [0, 2*pi), integrand rho * p(phi, rho)
// with the mean expressed as (d_mu, mu_phi).
PocResult poc_polar(const CollisionDisc& disc, const DiagGaussian2& g,
                    const QuadratureSpec& spec = {});

}  // namespace poc

#endif  // POC_POC_CIRCLE_HPP
