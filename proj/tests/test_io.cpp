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

#include <sstream>

#include <doctest.h>

#include "poc/io.hpp"

using namespace poc;

TEST_CASE("scenario csv round-trips at serialized precision") {
  ScenarioConfig config = scenario_a();
  config.mcs_samples = 2000;
  config.horizon = 1.5;
  const auto rows = run_scenario(config);

  std::stringstream buffer;
  write_scenario_csv(buffer, rows);
  const std::string first_pass = buffer.str();
  CHECK(first_pass.find(kScenarioCsvHeader) == 0);
  CHECK(first_pass.find("\r") == std::string::npos);

  std::stringstream reread(first_pass);
  const auto parsed = parse_scenario_csv(reread);
  REQUIRE(parsed.size() == rows.size());

  // Re-serializing the parsed rows reproduces the bytes exactly.
  std::stringstream second;
  write_scenario_csv(second, parsed);
  CHECK(second.str() == first_pass);
}

TEST_CASE("scenario csv parser reports malformed lines") {
  std::stringstream bad_header("nope\n");
  CHECK_THROWS_WITH_AS(parse_scenario_csv(bad_header), doctest::Contains("line 1"),
                       std::runtime_error);

  std::stringstream bad_field(std::string(kScenarioCsvHeader) +
                              "\n0,0,4,0,4,0,5.65,1,2.5,0,0,0,zzz\n");
  CHECK_THROWS_WITH_AS(parse_scenario_csv(bad_field), doctest::Contains("poc_mcs_rect"),
                       std::runtime_error);

  std::stringstream short_line(std::string(kScenarioCsvHeader) + "\n1,2,3\n");
  CHECK_THROWS_AS(parse_scenario_csv(short_line), std::runtime_error);
}

TEST_CASE("scenario config json round-trips") {
  const ScenarioConfig config = scenario_b();
  const std::string text = scenario_config_to_json(config);
  const ScenarioConfig parsed = scenario_config_from_json(text);
  CHECK(parsed.object.speed == config.object.speed);
  CHECK(parsed.object.pose.position.x == config.object.pose.position.x);
  CHECK(parsed.ego_shape.length == config.ego_shape.length);
  CHECK(parsed.uncertainty.sigma_max_2 == config.uncertainty.sigma_max_2);
  CHECK(parsed.dt == config.dt);
  CHECK(parsed.mcs_samples == config.mcs_samples);
  CHECK(parsed.mcs_seed.value == config.mcs_seed.value);
}

TEST_CASE("scenario config parser names the missing field") {
  const std::string text = scenario_config_to_json(scenario_a());

  auto drop_key = [](std::string s, const std::string& key) {
    const auto pos = s.find("\"" + key + "\"");
    const auto end = s.find_first_of(",}", pos);
    s.erase(pos, end - pos + 1);
    return s;
  };

  CHECK_THROWS_WITH_AS(scenario_config_from_json(drop_key(text, "object_radius")),
                       doctest::Contains("object_radius"), std::runtime_error);
  CHECK_THROWS_WITH_AS(scenario_config_from_json(drop_key(text, "dt")), doctest::Contains("dt"),
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(scenario_config_from_json("{ not json"), doctest::Contains("config"),
                       std::runtime_error);

  // Nested field names include their path.
  std::string no_speed = text;
  const auto pos = no_speed.find("\"speed\"");
  const auto end = no_speed.find_first_of(",}", pos);
  no_speed.erase(pos, end - pos + 1);
  CHECK_THROWS_WITH_AS(scenario_config_from_json(no_speed), doctest::Contains("ego.speed"),
                       std::runtime_error);
}
