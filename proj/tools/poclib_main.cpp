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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "poc/bench.hpp"
#include "poc/io.hpp"
#include "poc/poc_circle.hpp"
#include "poc/poc_multicircle.hpp"
#include "poc/scenario.hpp"

namespace {

constexpr int kExitSuccess = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitUsage = 2;

struct PocOptions {
  std::string method = "local-single";
  double r_e = 0.0;
  double r_o = 0.0;
  double mean_x = 0.0;
  double mean_y = 0.0;
  double sigma_x = 1.0;
  double sigma_y = 1.0;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  double abs_tol = 1e-6;
  double rel_tol = 1e-6;
};

struct BoundsOptions {
  double length = 0.0;
  double width = 0.0;
  double r_o = 0.0;
  double mean_x = 0.0;
  double mean_y = 0.0;
  double sigma_x = 1.0;
  double sigma_y = 1.0;
  double abs_tol = 1e-6;
  double rel_tol = 1e-6;
};

struct ScenarioOptions {
  std::string preset;
  std::string config_path;
  std::string out_path;
};

struct BenchOptions {
  int repetitions = 10000;
  std::uint64_t samples = 10000;
  std::string csv_path;
};

int run_poc(const PocOptions& opt) {
  if (!(opt.r_e > 0.0) || opt.r_o < 0.0 || !(opt.r_e + opt.r_o > 0.0)) {
    std::cerr << "poc: requires --re > 0 and --ro >= 0\n";
    return kExitUsage;
  }
  if (!(opt.sigma_x > 0.0) || !(opt.sigma_y > 0.0)) {
    std::cerr << "poc: requires --sigma-x > 0 and --sigma-y > 0\n";
    return kExitUsage;
  }
  if (opt.samples < 1) {
    std::cerr << "poc: requires --samples >= 1\n";
    return kExitUsage;
  }
  poc::PocMethod method;
  try {
    method = poc::poc_method_from_string(opt.method);
  } catch (const std::invalid_argument& e) {
    std::cerr << "poc: " << e.what() << "\n";
    return kExitUsage;
  }

  const poc::CollisionDisc disc{opt.r_e + opt.r_o};
  const poc::DiagGaussian2 g{{opt.mean_x, opt.mean_y}, opt.sigma_x, opt.sigma_y};
  const poc::QuadratureSpec spec{opt.abs_tol, opt.rel_tol, 50};
  poc::PocResult result;
  switch (method) {
    case poc::PocMethod::kMcs:
      result = poc::poc_mcs(disc, g, opt.samples, poc::RandomSeed{opt.seed});
      break;
    case poc::PocMethod::kLocalDouble:
      result = poc::poc_local_double(disc, g, spec);
      break;
    case poc::PocMethod::kLocalSingle:
      result = poc::poc_local_single(disc, g, spec);
      break;
    case poc::PocMethod::kGlobalDouble:
      result = poc::poc_global_double(disc, {0.0, 0.0}, g.mean, g.sigma1, g.sigma2, spec);
      break;
    case poc::PocMethod::kGlobalSingle:
      result = poc::poc_global_single(disc, {0.0, 0.0}, g.mean, g.sigma1, g.sigma2, spec);
      break;
    case poc::PocMethod::kPolar:
      result = poc::poc_polar(disc, g, spec);
      break;
  }
  const nlohmann::ordered_json out{{"value", result.value},
                                   {"method", poc::to_string(result.method)},
                                   {"error_estimate", result.error_estimate}};
  std::cout << out.dump() << "\n";
  return kExitSuccess;
}

int run_bounds(const BoundsOptions& opt) {
  if (!(opt.length > opt.width) || !(opt.width > 0.0)) {
    std::cerr << "bounds: requires --length > --width > 0\n";
    return kExitUsage;
  }
  if (!(opt.r_o > 0.0)) {
    std::cerr << "bounds: requires --ro > 0\n";
    return kExitUsage;
  }
  if (!(opt.sigma_x > 0.0) || !(opt.sigma_y > 0.0)) {
    std::cerr << "bounds: requires --sigma-x > 0 and --sigma-y > 0\n";
    return kExitUsage;
  }
  const poc::RectangleFootprint rect{opt.length, opt.width};
  const poc::DiagGaussian2 g{{opt.mean_x, opt.mean_y}, opt.sigma_x, opt.sigma_y};
  const poc::QuadratureSpec spec{opt.abs_tol, opt.rel_tol, 50};
  const poc::BoundsResult bounds = poc::poc_bounds(rect, opt.r_o, g, spec);
  const nlohmann::ordered_json out{
      {"lower", bounds.lower}, {"upper", bounds.upper}, {"delta", bounds.delta}};
  std::cout << out.dump() << "\n";
  return kExitSuccess;
}

int run_scenario_cmd(const ScenarioOptions& opt) {
  if (opt.preset.empty() == opt.config_path.empty()) {
    std::cerr << "scenario: requires exactly one of --preset or --config\n";
    return kExitUsage;
  }
  poc::ScenarioConfig config;
  if (!opt.preset.empty()) {
    if (opt.preset == "a") {
      config = poc::scenario_a();
    } else if (opt.preset == "b") {
      config = poc::scenario_b();
    } else {
      std::cerr << "scenario: unknown preset '" << opt.preset << "' (expected a or b)\n";
      return kExitUsage;
    }
  } else {
    std::ifstream in(opt.config_path);
    if (!in) {
      std::cerr << "scenario: cannot open config file '" << opt.config_path << "'\n";
      return kExitUsage;
    }
    std::ostringstream text;
    text << in.rdbuf();
    try {
      config = poc::scenario_config_from_json(text.str());
    } catch (const std::runtime_error& e) {
      std::cerr << "scenario: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  const std::vector<poc::TimeSeriesRow> rows = poc::run_scenario(config);
  std::ofstream out(opt.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "scenario: cannot open output file '" << opt.out_path << "'\n";
    return kExitUsage;
  }
  poc::write_scenario_csv(out, rows);
  return kExitSuccess;
}

int run_bench(const BenchOptions& opt) {
  if (opt.repetitions < 100) {
    std::cerr << "bench: requires --repetitions >= 100\n";
    return kExitUsage;
  }
  if (opt.samples < 1) {
    std::cerr << "bench: requires --samples >= 1\n";
    return kExitUsage;
  }
  const poc::BenchReport report =
      poc::bench_methods(poc::default_bench_case(), opt.repetitions, opt.samples);
  std::cout << poc::format_bench_table(report);
  if (!opt.csv_path.empty()) {
    std::ofstream out(opt.csv_path, std::ios::binary);
    if (!out) {
      std::cerr << "bench: cannot open output file '" << opt.csv_path << "'\n";
      return kExitUsage;
    }
    out << poc::bench_report_csv(report);
  }
  return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collision probability estimation for circle-approximated vehicles"};
  app.require_subcommand(1);

  PocOptions poc_opt;
  CLI::App* poc_cmd = app.add_subcommand("poc", "Circle-to-circle collision probability");
  poc_cmd->add_option("--method", poc_opt.method,
                      "mcs|local-single|local-double|global-single|global-double|polar");
  poc_cmd->add_option("--re", poc_opt.r_e, "Ego circle radius")->required();
  poc_cmd->add_option("--ro", poc_opt.r_o, "Object circle radius")->required();
  poc_cmd->add_option("--mean-x", poc_opt.mean_x, "Object mean x (ego frame)")->required();
  poc_cmd->add_option("--mean-y", poc_opt.mean_y, "Object mean y (ego frame)")->required();
  poc_cmd->add_option("--sigma-x", poc_opt.sigma_x, "Std dev along x")->required();
  poc_cmd->add_option("--sigma-y", poc_opt.sigma_y, "Std dev along y")->required();
  poc_cmd->add_option("--samples", poc_opt.samples, "MCS sample count");
  poc_cmd->add_option("--seed", poc_opt.seed, "MCS seed");
  poc_cmd->add_option("--abs-tol", poc_opt.abs_tol, "Quadrature absolute tolerance");
  poc_cmd->add_option("--rel-tol", poc_opt.rel_tol, "Quadrature relative tolerance");

  BoundsOptions bounds_opt;
  CLI::App* bounds_cmd =
      app.add_subcommand("bounds", "Upper/lower POC bounds for a rectangular ego");
  bounds_cmd->add_option("--length", bounds_opt.length, "Ego rectangle length")->required();
  bounds_cmd->add_option("--width", bounds_opt.width, "Ego rectangle width")->required();
  bounds_cmd->add_option("--ro", bounds_opt.r_o, "Object circle radius")->required();
  bounds_cmd->add_option("--mean-x", bounds_opt.mean_x, "Object mean x (ego frame)")->required();
  bounds_cmd->add_option("--mean-y", bounds_opt.mean_y, "Object mean y (ego frame)")->required();
  bounds_cmd->add_option("--sigma-x", bounds_opt.sigma_x, "Std dev along x")->required();
  bounds_cmd->add_option("--sigma-y", bounds_opt.sigma_y, "Std dev along y")->required();
  bounds_cmd->add_option("--abs-tol", bounds_opt.abs_tol, "Quadrature absolute tolerance");
  bounds_cmd->add_option("--rel-tol", bounds_opt.rel_tol, "Quadrature relative tolerance");

  ScenarioOptions scenario_opt;
  CLI::App* scenario_cmd =
      app.add_subcommand("scenario", "Time series of POC bounds for an intersection scenario");
  scenario_cmd->add_option("--preset", scenario_opt.preset, "Built-in scenario: a or b");
  scenario_cmd->add_option("--config", scenario_opt.config_path, "Scenario config JSON file");
  scenario_cmd->add_option("--out", scenario_opt.out_path, "Output CSV path")->required();

  BenchOptions bench_opt;
  CLI::App* bench_cmd =
      app.add_subcommand("bench", "Average per-call timing of the six estimators");
  bench_cmd->add_option("--repetitions", bench_opt.repetitions, "Timed calls per method");
  bench_cmd->add_option("--samples", bench_opt.samples, "MCS sample count");
  bench_cmd->add_option("--csv", bench_opt.csv_path, "Also write the report as CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (poc_cmd->parsed()) return run_poc(poc_opt);
    if (bounds_cmd->parsed()) return run_bounds(bounds_opt);
    if (scenario_cmd->parsed()) return run_scenario_cmd(scenario_opt);
    if (bench_cmd->parsed()) return run_bench(bench_opt);
  } catch (const poc::QuadratureError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
  return kExitUsage;
}
