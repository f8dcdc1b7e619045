// Copyright 2026 The Authors.
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

// Benchmark suites: generator specs times solvers, run on a worker pool.
// Reports are byte-identical for identical suites unless wall times are
// requested.
//
// CSV columns, in order:
//   schema, cell, spec, seed, n, groups, solver, status, bins, lower_bound,
//   lp_bound, opt, ratio, error [, wall_ms]
// lower_bound is max(ceil(s(I)), V(I)); lp_bound and opt may be empty;
// ratio is bins / opt with six decimals.

#ifndef BPP_BENCH_H_
#define BPP_BENCH_H_

#include <string>
#include <vector>

#include "bpp/config_lp.h"
#include "bpp/core.h"
#include "bpp/generators.h"
#include "json.hpp"

namespace bpp {

inline constexpr int kBenchSchemaVersion = 1;

struct BenchSpec {
  std::string name;
  GeneratorSpec gen;
  int count = 1;  // seeds gen.seed, gen.seed + 1, ...
};

struct BenchSuite {
  std::vector<BenchSpec> specs;
  std::vector<std::string> solvers;  // afptas, ffd, greedy, exact
  Rational epsilon{1, 11};
  bool test_mode = false;
  Overrides overrides;
  PricingMode pricing = PricingMode::kAuto;
  Rational delta{1, 10};  // for greedy
  bool oracle = false;
  int oracle_max_n = 14;
  double oracle_time_limit_s = 30;
  int workers = 1;
  bool timings = false;
};

// {"specs":[{"name":..,"n":..,"groups":..,"k_min":..,"k_max":..,
//   "distribution":..,"seed":..,"count":..}], "solvers":[..], "epsilon":"1/11",
//   "test_mode":false, "overrides":["alpha=3"], "pricing":"auto",
//   "delta":"1/10", "oracle":true, "oracle_max_n":14}
BenchSuite ParseSuite(const std::string& text, const std::string& source);

struct BenchRow {
  int cell = 0;
  std::string spec;
  uint64_t seed = 0;
  int n = 0;
  int groups = 0;
  std::string solver;
  std::string status;  // ok, invalid, error, cap
  int64_t bins = 0;
  int64_t lower_bound = 0;
  std::string lp_bound;
  std::string opt;
  std::string ratio;
  std::string error;
  double wall_ms = 0;
};

std::vector<BenchRow> RunBench(const BenchSuite& suite);

std::string BenchCsv(const std::vector<BenchRow>& rows, bool timings);
nlohmann::json BenchJson(const BenchSuite& suite, const std::vector<BenchRow>& rows);

PricingMode ParsePricing(const std::string& name);

}  // namespace bpp

#endif  // BPP_BENCH_H_
