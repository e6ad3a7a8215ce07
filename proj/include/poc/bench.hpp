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

#ifndef POC_BENCH_HPP
#define POC_BENCH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "poc/poc_circle.hpp"

namespace poc {

// One fixed circle-to-circle case posed in global coordinates so that every
// timed call starts from global quantities and pays for its own coordinate
// transformation.
struct BenchCase {
  CollisionDisc disc{1.0};
  Vec2 ego_position;
  Vec2 obj_mean_global;
  double sigma1 = 1.0;
  double sigma2 = 1.0;
};

struct BenchRow {
  PocMethod method = PocMethod::kMcs;
  double mean_ms = 0.0;
  int repetitions = 0;
  double value = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  int repetitions = 0;
  std::size_t mcs_samples = 0;
  bool reduced_quality = false;  // repetitions too low for stable means
};

// Appendix-style two-circle geometry with the object two meters wide and a
// mildly anisotropic, offset Gaussian.
BenchCase default_bench_case();

// Quadrature tolerances used for the timing comparison: three digits of
// precision, matching the precision MCS delivers at 1e4 samples.
inline constexpr QuadratureSpec kThreeDigitSpec{1e-3, 1e-3, 50};

// Times all six estimator variants on `bench_case`: 100 warm-up calls per
// method are discarded, then `repetitions` calls are averaged.  Requires
// repetitions >= 100.
BenchReport bench_methods(const BenchCase& bench_case, int repetitions, std::size_t n_mcs,
                          const QuadratureSpec& spec = kThreeDigitSpec);

// Aligned text table of the report.
std::string format_bench_table(const BenchReport& report);
// CSV (method,mean_ms,repetitions,value) for downstream tooling.
std::string bench_report_csv(const BenchReport& report);

}  // namespace poc

#endif  // POC_BENCH_HPP
