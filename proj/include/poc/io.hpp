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

#ifndef POC_IO_HPP
#define POC_IO_HPP

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "poc/scenario.hpp"

namespace poc {

inline constexpr const char* kScenarioCsvHeader =
    "t,ego_x,ego_y,ego_heading,obj_x,obj_y,distance,sigma1,sigma2,"
    "poc_lower,poc_upper,delta,poc_mcs_rect";

// CSV with the fixed header above, one row per step, LF line endings,
// numbers printed with 9 significant digits.
void write_scenario_csv(std::ostream& out, std::span<const TimeSeriesRow> rows);

// Parses a CSV produced by write_scenario_csv; throws std::runtime_error
// with a line diagnostic on malformed input.
std::vector<TimeSeriesRow> parse_scenario_csv(std::istream& in);

// JSON <-> ScenarioConfig.  Parsing throws std::runtime_error naming the
// missing or malformed field.
ScenarioConfig scenario_config_from_json(const std::string& text);
std::string scenario_config_to_json(const ScenarioConfig& config);

}  // namespace poc

#endif  // POC_IO_HPP
