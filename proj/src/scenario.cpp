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

#include "poc/scenario.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace poc {

std::pair<double, double> logistic_sigma(const UncertaintyModel& model, double d) {
  if (!(model.lambda > 0.0) || !(model.d0 > 0.0) || !(model.sigma_max_1 > 0.0) ||
      !(model.sigma_max_2 > 0.0)) {
    throw std::invalid_argument("logistic_sigma: model parameters must be positive");
  }
  if (!(d >= 0.0)) throw std::invalid_argument("logistic_sigma: distance must be non-negative");
  const double scale = 1.0 / (1.0 + std::exp(-model.lambda * (d - model.d0)));
  return {scale * model.sigma_max_1, scale * model.sigma_max_2};
}

ActorState propagate(const ActorState& state, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("propagate: dt must be positive");
  const double heading = state.pose.heading;
  Vec2 position = state.pose.position;
  double new_heading = heading;
  if (state.turn_rate == 0.0) {
    position.x += state.speed * dt * std::cos(heading);
    position.y += state.speed * dt * std::sin(heading);
  } else {
    // Constant turn rate arc.
    new_heading = heading + state.turn_rate * dt;
    const double radius = state.speed / state.turn_rate;
    position.x += radius * (std::sin(new_heading) - std::sin(heading));
    position.y -= radius * (std::cos(new_heading) - std::cos(heading));
  }
  return {Pose{position, new_heading}, state.speed, state.turn_rate};
}

DiagGaussian2 relative_gaussian(const Pose& ego, Vec2 object_position, double sigma1,
                                double sigma2) {
  const double c = std::cos(ego.heading);
  const double s = std::sin(ego.heading);
  const Vec2 d = object_position - ego.position;
  const DiagGaussian2 g{{c * d.x + s * d.y, -s * d.x + c * d.y}, sigma1, sigma2};
  validate(g);
  return g;
}

std::vector<TimeSeriesRow> run_scenario(const ScenarioConfig& config) {
  if (!(config.dt > 0.0) || !(config.horizon >= config.dt)) {
    throw std::invalid_argument("run_scenario: requires dt > 0 and horizon >= dt");
  }
  if (config.mcs_samples < 1) {
    throw std::invalid_argument("run_scenario: mcs_samples must be at least 1");
  }
  const int n_steps = static_cast<int>(std::floor(config.horizon / config.dt + 0.5)) + 1;
  const QuadratureSpec spec;

  std::vector<TimeSeriesRow> rows;
  rows.reserve(static_cast<std::size_t>(n_steps));
  for (int k = 0; k < n_steps; ++k) {
    const double t = k * config.dt;
    const ActorState ego = k == 0 ? config.ego : propagate(config.ego, t);
    const ActorState object = k == 0 ? config.object : propagate(config.object, t);

    TimeSeriesRow row;
    row.t = t;
    row.ego_pose = ego.pose;
    row.object_position = object.pose.position;
    row.distance = norm(ego.pose.position - object.pose.position);
    const auto [sigma1, sigma2] = logistic_sigma(config.uncertainty, row.distance);
    row.sigma1 = sigma1;
    row.sigma2 = sigma2;

    const DiagGaussian2 g = relative_gaussian(ego.pose, object.pose.position, sigma1, sigma2);
    const BoundsResult bounds = poc_bounds(config.ego_shape, config.object_radius, g, spec);
    row.poc_lower = bounds.lower;
    row.poc_upper = bounds.upper;
    row.delta = bounds.delta;

    // Rectangle-vs-circle reference, sampled in the ego frame with a
    // per-step seed.
    SplitMix64 rng(RandomSeed{config.mcs_seed.value + static_cast<std::uint64_t>(k)});
    const Pose body_frame{{0.0, 0.0}, 0.0};
    std::size_t hits = 0;
    for (std::size_t i = 0; i < config.mcs_samples; ++i) {
      const Vec2 z = rng.next_standard_pair();
      const Vec2 draw{g.mean.x + g.sigma1 * z.x, g.mean.y + g.sigma2 * z.y};
      if (rectangle_circle_indicator(body_frame, config.ego_shape,
                                     Circle{draw, config.object_radius})) {
        ++hits;
      }
    }
    row.poc_mcs_rect = static_cast<double>(hits) / static_cast<double>(config.mcs_samples);
    rows.push_back(row);
  }
  return rows;
}

namespace {

ScenarioConfig intersection_preset(Vec2 object_start, double object_speed) {
  ScenarioConfig config;
  config.ego = {Pose{{0.0, 4.0}, 0.0}, 1.0, 0.0};
  config.object = {Pose{object_start, std::numbers::pi / 2.0}, object_speed, 0.0};
  config.ego_shape = RectangleFootprint{4.5, 2.0};
  config.object_radius = 2.0;
  config.uncertainty = {6.0, 1.0, 2.0, 5.0};
  config.dt = 0.1;
  config.horizon = 8.0;
  config.mcs_samples = 100000;
  config.mcs_seed = RandomSeed{20260808};
  return config;
}

}  // namespace

ScenarioConfig scenario_a() { return intersection_preset({4.0, 0.0}, 1.0); }

ScenarioConfig scenario_b() { return intersection_preset({6.0, 0.0}, 1.5); }

}  // namespace poc
