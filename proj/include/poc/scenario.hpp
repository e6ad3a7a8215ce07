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

#ifndef POC_SCENARIO_HPP
#define POC_SCENARIO_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "poc/gaussian.hpp"
#include "poc/geometry.hpp"
#include "poc/poc_multicircle.hpp"

namespace poc {

// Distance-dependent standard deviations: a logistic ramp from near zero at
// d = 0 up to (sigma_max_1, sigma_max_2), with midpoint d0 and slope lambda.
struct UncertaintyModel {
  double lambda = 0.0;    // 1/m
  double d0 = 0.0;        // m
  double sigma_max_1 = 0.0;
  double sigma_max_2 = 0.0;
};

struct ActorState {
  Pose pose;
  double speed = 0.0;      // m/s
  double turn_rate = 0.0;  // rad/s
};

struct ScenarioConfig {
  ActorState ego;
  ActorState object;
  RectangleFootprint ego_shape{4.5, 2.0};
  double object_radius = 2.0;
  UncertaintyModel uncertainty;
  double dt = 0.1;        // s
  double horizon = 8.0;   // s
  std::size_t mcs_samples = 100000;
  RandomSeed mcs_seed;
};

struct TimeSeriesRow {
  double t = 0.0;
  Pose ego_pose;
  Vec2 object_position;
  double distance = 0.0;
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  double poc_lower = 0.0;
  double poc_upper = 0.0;
  double delta = 0.0;
  double poc_mcs_rect = 0.0;
};

// (sigma1, sigma2) at center distance d.
std::pair<double, double> logistic_sigma(const UncertaintyModel& model, double d);

// Constant-velocity (or constant-turn-rate) kinematics over an elapsed dt.
ActorState propagate(const ActorState& state, double dt);

// Object-position Gaussian in the ego body frame: the mean is the object
// position rotated into the ego frame; the sigmas are already ego-frame.
DiagGaussian2 relative_gaussian(const Pose& ego, Vec2 object_position, double sigma1,
                                double sigma2);

// One row per step t = 0, dt, ..., horizon: actor kinematics, logistic
// sigmas, two-circle POC bounds, and a seeded rectangle-vs-circle MCS
// reference (seed + step index per step).  Deterministic given the config.
std::vector<TimeSeriesRow> run_scenario(const ScenarioConfig& config);

// Crossing-trajectory intersection presets; in A the actors drive through
// each other around t = 4 s, in B the object clears the intersection first.
ScenarioConfig scenario_a();
ScenarioConfig scenario_b();

}  // namespace poc

#endif  // POC_SCENARIO_HPP
