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

#include "poc/io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace poc {
namespace {

std::string format_number(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.9g", v);
  return buffer;
}

double parse_field(const std::string& token, std::size_t line_no, const char* field) {
  try {
    std::size_t consumed = 0;
    const double v = std::stod(token, &consumed);
    if (consumed != token.size()) throw std::invalid_argument(token);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("scenario csv: line " + std::to_string(line_no) +
                             ": malformed value for '" + field + "'");
  }
}

const nlohmann::json& require_field(const nlohmann::json& parent, const char* key,
                                    const std::string& path) {
  if (!parent.contains(key)) {
    throw std::runtime_error("scenario config: missing field '" + path + "'");
  }
  return parent.at(key);
}

double require_number(const nlohmann::json& parent, const char* key, const std::string& path) {
  const nlohmann::json& value = require_field(parent, key, path);
  if (!value.is_number()) {
    throw std::runtime_error("scenario config: field '" + path + "' must be a number");
  }
  return value.get<double>();
}

ActorState parse_actor(const nlohmann::json& root, const char* key) {
  const std::string path(key);
  const nlohmann::json& actor = require_field(root, key, path);
  ActorState state;
  state.pose = Pose{{require_number(actor, "x", path + ".x"),
                     require_number(actor, "y", path + ".y")},
                    require_number(actor, "heading", path + ".heading")};
  state.speed = require_number(actor, "speed", path + ".speed");
  state.turn_rate = require_number(actor, "turn_rate", path + ".turn_rate");
  return state;
}

}  // namespace

void write_scenario_csv(std::ostream& out, std::span<const TimeSeriesRow> rows) {
  out << kScenarioCsvHeader << '\n';
  for (const TimeSeriesRow& row : rows) {
    out << format_number(row.t) << ',' << format_number(row.ego_pose.position.x) << ','
        << format_number(row.ego_pose.position.y) << ',' << format_number(row.ego_pose.heading)
        << ',' << format_number(row.object_position.x) << ','
        << format_number(row.object_position.y) << ',' << format_number(row.distance) << ','
        << format_number(row.sigma1) << ',' << format_number(row.sigma2) << ','
        << format_number(row.poc_lower) << ',' << format_number(row.poc_upper) << ','
        << format_number(row.delta) << ',' << format_number(row.poc_mcs_rect) << '\n';
  }
}

std::vector<TimeSeriesRow> parse_scenario_csv(std::istream& in) {
  static constexpr const char* kFields[] = {
      "t",      "ego_x",  "ego_y",     "ego_heading", "obj_x",     "obj_y", "distance",
      "sigma1", "sigma2", "poc_lower", "poc_upper",   "delta",     "poc_mcs_rect"};
  constexpr std::size_t kNumFields = std::size(kFields);

  std::string line;
  if (!std::getline(in, line) || line != kScenarioCsvHeader) {
    throw std::runtime_error("scenario csv: line 1: unexpected header");
  }
  std::vector<TimeSeriesRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::array<double, kNumFields> values{};
    std::size_t start = 0;
    for (std::size_t f = 0; f < kNumFields; ++f) {
      const std::size_t end = f + 1 == kNumFields ? line.size() : line.find(',', start);
      if (end == std::string::npos) {
        throw std::runtime_error("scenario csv: line " + std::to_string(line_no) +
                                 ": expected 13 fields");
      }
      values[f] = parse_field(line.substr(start, end - start), line_no, kFields[f]);
      start = end + 1;
    }
    TimeSeriesRow row;
    row.t = values[0];
    row.ego_pose = Pose{{values[1], values[2]}, values[3]};
    row.object_position = {values[4], values[5]};
    row.distance = values[6];
    row.sigma1 = values[7];
    row.sigma2 = values[8];
    row.poc_lower = values[9];
    row.poc_upper = values[10];
    row.delta = values[11];
    row.poc_mcs_rect = values[12];
    rows.push_back(row);
  }
  return rows;
}

ScenarioConfig scenario_config_from_json(const std::string& text) {
  nlohmann::json root;
  try {
    root = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("scenario config: ") + e.what());
  }

  ScenarioConfig config;
  config.ego = parse_actor(root, "ego");
  config.object = parse_actor(root, "object");
  const nlohmann::json& shape = require_field(root, "ego_shape", "ego_shape");
  try {
    config.ego_shape = RectangleFootprint{require_number(shape, "length", "ego_shape.length"),
                                          require_number(shape, "width", "ego_shape.width")};
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("scenario config: ego_shape: ") + e.what());
  }
  config.object_radius = require_number(root, "object_radius", "object_radius");
  const nlohmann::json& unc = require_field(root, "uncertainty", "uncertainty");
  config.uncertainty = {require_number(unc, "lambda", "uncertainty.lambda"),
                        require_number(unc, "d0", "uncertainty.d0"),
                        require_number(unc, "sigma_max_1", "uncertainty.sigma_max_1"),
                        require_number(unc, "sigma_max_2", "uncertainty.sigma_max_2")};
  config.dt = require_number(root, "dt", "dt");
  config.horizon = require_number(root, "horizon", "horizon");
  const double samples = require_number(root, "mcs_samples", "mcs_samples");
  if (!(samples >= 1.0)) {
    throw std::runtime_error("scenario config: field 'mcs_samples' must be at least 1");
  }
  config.mcs_samples = static_cast<std::size_t>(samples);
  const nlohmann::json& seed = require_field(root, "mcs_seed", "mcs_seed");
  if (!seed.is_number_unsigned() && !seed.is_number_integer()) {
    throw std::runtime_error("scenario config: field 'mcs_seed' must be an integer");
  }
  config.mcs_seed = RandomSeed{seed.get<std::uint64_t>()};
  return config;
}

std::string scenario_config_to_json(const ScenarioConfig& config) {
  auto actor = [](const ActorState& state) {
    return nlohmann::ordered_json{{"x", state.pose.position.x},
                                  {"y", state.pose.position.y},
                                  {"heading", state.pose.heading},
                                  {"speed", state.speed},
                                  {"turn_rate", state.turn_rate}};
  };
  const nlohmann::ordered_json root{
      {"ego", actor(config.ego)},
      {"object", actor(config.object)},
      {"ego_shape",
       nlohmann::ordered_json{{"length", config.ego_shape.length},
                              {"width", config.ego_shape.width}}},
      {"object_radius", config.object_radius},
      {"uncertainty",
       nlohmann::ordered_json{{"lambda", config.uncertainty.lambda},
                              {"d0", config.uncertainty.d0},
                              {"sigma_max_1", config.uncertainty.sigma_max_1},
                              {"sigma_max_2", config.uncertainty.sigma_max_2}}},
      {"dt", config.dt},
      {"horizon", config.horizon},
      {"mcs_samples", config.mcs_samples},
      {"mcs_seed", config.mcs_seed.value}};
  return root.dump(2) + "\n";
}

}  // namespace poc
