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

#include "poc/bench.hpp"

#include <chrono>
#include <limits>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace poc {
namespace {

using Clock = std::chrono::steady_clock;

double timed_batch_ms(const std::function<double()>& call, int batch_reps, double* sink) {
  const auto start = Clock::now();
  for (int i = 0; i < batch_reps; ++i) *sink += call();
  const auto stop = Clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() / batch_reps;
}

}  // namespace

BenchCase default_bench_case() {
  // Two-circle cover of a 4.5 x 2 rectangle against a 2 m object.
  const CoverArrangement arr = cover_arrangement(RectangleFootprint{4.5, 2.0}, 2, 1);
  BenchCase bench_case{CollisionDisc{arr.radius + 2.0}, {10.0, -5.0}, {11.0, -4.0}, 1.0, 2.0};
  return bench_case;
}

BenchReport bench_methods(const BenchCase& bench_case, int repetitions, std::size_t n_mcs,
                          const QuadratureSpec& spec) {
  if (repetitions < 100) {
    throw std::invalid_argument("bench_methods: repetitions must be at least 100");
  }
  if (n_mcs < 1) throw std::invalid_argument("bench_methods: n_mcs must be at least 1");
  constexpr int kWarmup = 100;
  const RandomSeed seed{13};

  // Every call starts from the global-frame case so that the local methods
  // pay for their own coordinate transformation.
  const CollisionDisc disc = bench_case.disc;
  const Vec2 ego = bench_case.ego_position;
  const Vec2 obj = bench_case.obj_mean_global;
  const double s1 = bench_case.sigma1;
  const double s2 = bench_case.sigma2;
  auto local_gaussian = [=]() { return DiagGaussian2{obj - ego, s1, s2}; };

  const std::vector<std::pair<PocMethod, std::function<double()>>> calls = {
      {PocMethod::kMcs, [=]() { return poc_mcs(disc, local_gaussian(), n_mcs, seed).value; }},
      {PocMethod::kLocalDouble,
       [=]() { return poc_local_double(disc, local_gaussian(), spec).value; }},
      {PocMethod::kLocalSingle,
       [=]() { return poc_local_single(disc, local_gaussian(), spec).value; }},
      {PocMethod::kGlobalDouble,
       [=]() { return poc_global_double(disc, ego, obj, s1, s2, spec).value; }},
      {PocMethod::kGlobalSingle,
       [=]() { return poc_global_single(disc, ego, obj, s1, s2, spec).value; }},
      {PocMethod::kPolar, [=]() { return poc_polar(disc, local_gaussian(), spec).value; }},
  };

  BenchReport report;
  report.repetitions = repetitions;
  report.mcs_samples = n_mcs;
  report.reduced_quality = repetitions < 1000;
  double sink = 0.0;
  for (const auto& [method, call] : calls) {
    BenchRow row;
    row.method = method;
    row.repetitions = repetitions;
    row.value = call();
    report.rows.push_back(row);
    for (int i = 0; i < kWarmup; ++i) sink += call();
  }

  // The batches are interleaved across methods so slow drift (thermal,
  // frequency scaling) hits every method alike; the smallest batch mean is
  // reported, which filters one-sided scheduler noise.
  constexpr int kBatches = 20;
  const int batch_reps = (repetitions + kBatches - 1) / kBatches;
  std::vector<double> best_ms(calls.size(), std::numeric_limits<double>::infinity());
  for (int batch = 0; batch < kBatches; ++batch) {
    for (std::size_t m = 0; m < calls.size(); ++m) {
      best_ms[m] = std::min(best_ms[m], timed_batch_ms(calls[m].second, batch_reps, &sink));
    }
  }
  for (std::size_t m = 0; m < calls.size(); ++m) report.rows[m].mean_ms = best_ms[m];

  if (!std::isfinite(sink)) throw std::runtime_error("bench_methods: non-finite results");
  return report;
}

std::string format_bench_table(const BenchReport& report) {
  std::ostringstream out;
  char line[128];
  std::snprintf(line, sizeof(line), "%-14s  %14s  %11s  %12s\n", "method", "mean_ms",
                "repetitions", "value");
  out << line;
  for (const BenchRow& row : report.rows) {
    std::snprintf(line, sizeof(line), "%-14s  %14.6f  %11d  %12.9f\n",
                  to_string(row.method).c_str(), row.mean_ms, row.repetitions, row.value);
    out << line;
  }
  if (report.reduced_quality) {
    out << "note: fewer than 1000 repetitions; timing means have reduced statistical quality\n";
  }
  return out.str();
}

std::string bench_report_csv(const BenchReport& report) {
  std::ostringstream out;
  out << "method,mean_ms,repetitions,value\n";
  char line[128];
  for (const BenchRow& row : report.rows) {
    std::snprintf(line, sizeof(line), "%s,%.6f,%d,%.9f\n", to_string(row.method).c_str(),
                  row.mean_ms, row.repetitions, row.value);
    out << line;
  }
  return out.str();
}

}  // namespace poc
