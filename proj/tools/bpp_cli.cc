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

// bpp: solve, inspect and benchmark bin packing with partition matroid
// constraints. Exit status: 0 success, 1 invalid packing or failed contract,
// 2 bad input.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "bpp/bench.h"
#include "bpp/greedy.h"
#include "bpp/io.h"
#include "bpp/oracle.h"
#include "bpp/pipeline.h"

namespace {

using bpp::Rational;
using nlohmann::json;

Rational ParseRationalOrThrow(const std::string& text, const std::string& what) {
  auto r = bpp::ParseRational(text);
  if (!r) throw bpp::InvalidInput("bad " + what + " \"" + text + "\"");
  return *r;
}

void Emit(const json& j, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw bpp::InvalidInput(path + ": cannot write");
  f << j.dump(2) << "\n";
}

void EmitText(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw bpp::InvalidInput(path + ": cannot write");
  f << text;
}

int64_t LowerBound(const bpp::Instance& inst) {
  if (inst.empty()) return 0;
  return std::max<int64_t>(bpp::Ceil(inst.TotalSize()).get_si(), bpp::CardinalityBound(inst));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bin packing with partition matroid constraints"};
  app.require_subcommand(1);

  std::string instance_path, packing_path, out_path;

  // solve
  auto* solve = app.add_subcommand("solve", "Run the full approximation pipeline");
  std::string eps_text = "1/11", pricing = "auto", dump_dir;
  bool test_mode = false, oracle = false, timings = false, auto_eps = false,
       skip_polytopes = false;
  std::vector<std::string> overrides;
  solve->add_option("instance", instance_path, "Instance JSON")->required();
  solve->add_option("--eps", eps_text, "Accuracy p/q (default 1/11)");
  solve->add_flag("--auto-eps", auto_eps, "Use the theoretical epsilon rule");
  solve->add_flag("--test-mode", test_mode, "Admit any eps in (0, 1/2) and overrides");
  solve->add_option("--override", overrides,
                    "Constant override key=value (alpha, upsilon, eta, kappa, threshold, "
                    "support_cap); requires --test-mode");
  solve->add_option("--pricing", pricing, "auto, exact or fptas");
  solve->add_option("--dump-stages", dump_dir, "Directory for per-stage dumps");
  solve->add_flag("--oracle", oracle, "Also run the exact solver");
  solve->add_flag("--timings", timings, "Include wall times");
  solve->add_flag("--skip-polytope-checks", skip_polytopes,
                  "Skip the polytope feasibility assertions");
  solve->add_option("-o,--out", out_path, "Write the report here");

  // exact
  auto* exact = app.add_subcommand("exact", "Exact branch and bound");
  int64_t node_limit = 20'000'000;
  double time_limit = 60;
  exact->add_option("instance", instance_path, "Instance JSON")->required();
  exact->add_option("--node-limit", node_limit, "Search node cap");
  exact->add_option("--time-limit", time_limit, "Seconds");
  exact->add_option("-o,--out", out_path, "Write the report here");

  // ffd
  auto* ffd = app.add_subcommand("ffd", "First-Fit Decreasing with group caps");
  ffd->add_option("instance", instance_path, "Instance JSON")->required();
  ffd->add_option("-o,--out", out_path, "Write the report here");

  // greedy
  auto* greedy = app.add_subcommand("greedy", "Greedy packer for all-small instances");
  std::string delta_text = "1/10";
  greedy->add_option("instance", instance_path, "Instance JSON")->required();
  greedy->add_option("--delta", delta_text, "Item size bound delta in (0, 1/2)");
  greedy->add_option("-o,--out", out_path, "Write the report here");

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  bpp::GeneratorSpec spec;
  std::string dist = "uniform", band_text = "1/121";
  gen->add_option("--n", spec.n, "Number of items");
  gen->add_option("--groups", spec.groups, "Number of groups");
  gen->add_option("--k-min", spec.k_min, "Smallest cap");
  gen->add_option("--k-max", spec.k_max, "Largest cap");
  gen->add_option("--dist", dist, "uniform, clustered, heavy-dust or small");
  gen->add_option("--seed", spec.seed, "Seed");
  gen->add_option("--grid", spec.grid, "Size grid denominator");
  gen->add_option("--t", spec.t, "Cluster center 1/t");
  gen->add_option("--spread", spec.spread, "Cluster half-width in grid steps");
  gen->add_option("--band", band_text, "Heavy/dust boundary or small-item bound");
  gen->add_option("--heavy-percent", spec.heavy_percent, "Share of heavy items");
  gen->add_option("-o,--out", out_path, "Write the instance here");

  // bench
  auto* bench = app.add_subcommand("bench", "Run a benchmark suite");
  std::string suite_path, csv_path = "-", json_path;
  int workers = 1;
  bool bench_timings = false, bench_oracle = false;
  bench->add_option("suite", suite_path, "Suite JSON")->required();
  bench->add_option("--csv", csv_path, "CSV output (default stdout)");
  bench->add_option("--json", json_path, "JSON output");
  bench->add_option("--workers", workers, "Worker threads");
  bench->add_flag("--timings", bench_timings, "Add wall-time columns");
  bench->add_flag("--oracle", bench_oracle, "Add exact optimum columns");

  // check
  auto* check = app.add_subcommand("check", "Validate a packing against an instance");
  check->add_option("instance", instance_path, "Instance JSON")->required();
  check->add_option("packing", packing_path, "Packing JSON")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      bpp::Instance inst = bpp::LoadInstance(instance_path);
      Rational eps = ParseRationalOrThrow(eps_text, "--eps");
      json auto_info;
      if (auto_eps) {
        bpp::AutoEpsilonResult a = bpp::AutoEpsilon(inst);
        eps = a.epsilon;
        auto_info = {{"epsilon", bpp::ToString(a.epsilon)},
                     {"theory_mode", a.theory_mode},
                     {"recommended", bpp::ToString(a.recommended)}};
      }
      bpp::Overrides ov;
      for (const std::string& o : overrides) bpp::ApplyOverride(ov, o);
      if (ov.any() && !test_mode) throw bpp::InvalidInput("--override requires --test-mode");
      bpp::ConstantSet k = bpp::MakeConstants(eps, ov, test_mode);
      bpp::SolveOptions opt;
      opt.pricing = bpp::ParsePricing(pricing);
      opt.dump_dir = dump_dir;
      opt.check_polytopes = !skip_polytopes;
      bpp::SolveResult r = bpp::GenAfptas(inst, k, opt);
      json report = bpp::ReportJson(r, timings);
      report["lower_bound"] = LowerBound(inst);
      report["packing"] = bpp::PackingJson(inst, r.packing)["bins"];
      if (!auto_info.is_null()) report["auto_epsilon"] = auto_info;
      if (oracle) {
        bpp::OracleLimits lim;
        lim.lower_bound = r.lp_lower_bound / (1 + eps);
        bpp::OracleResult o = bpp::ExactOpt(inst, lim);
        report["oracle"] = {{"status", o.status == bpp::OracleStatus::kOptimal ? "optimal" : "cap"},
                            {"bins", o.bins}};
      }
      Emit(report, out_path);
      return 0;
    }
    if (*exact) {
      bpp::Instance inst = bpp::LoadInstance(instance_path);
      bpp::OracleLimits lim;
      lim.node_limit = node_limit;
      lim.time_limit_s = time_limit;
      bpp::OracleResult o = bpp::ExactOpt(inst, lim);
      Emit({{"status", o.status == bpp::OracleStatus::kOptimal ? "optimal" : "cap"},
            {"bins", o.bins},
            {"lower_bound", o.lower_bound},
            {"nodes", o.nodes},
            {"packing", bpp::PackingJson(inst, o.packing)["bins"]}},
           out_path);
      return 0;
    }
    if (*ffd) {
      bpp::Instance inst = bpp::LoadInstance(instance_path);
      bpp::Packing p = bpp::FirstFitDecreasing(inst);
      Emit({{"bins", p.num_bins()}, {"lower_bound", LowerBound(inst)},
            {"packing", bpp::PackingJson(inst, p)["bins"]}},
           out_path);
      return 0;
    }
    if (*greedy) {
      bpp::Instance inst = bpp::LoadInstance(instance_path);
      Rational delta = ParseRationalOrThrow(delta_text, "--delta");
      bpp::GreedyStats st;
      bpp::Packing p = bpp::Greedy(inst, delta, &st);
      Emit({{"bins", p.num_bins()},
            {"bound", bpp::ToString(bpp::GreedyBound(inst, delta))},
            {"fallbacks", st.fallbacks},
            {"packing", bpp::PackingJson(inst, p)["bins"]}},
           out_path);
      return 0;
    }
    if (*gen) {
      spec.distribution = bpp::ParseDistribution(dist);
      spec.band = ParseRationalOrThrow(band_text, "--band");
      Emit(bpp::InstanceJson(bpp::GenerateInstance(spec)), out_path);
      return 0;
    }
    if (*bench) {
      bpp::BenchSuite suite = bpp::ParseSuite(bpp::ReadFile(suite_path), suite_path);
      suite.workers = workers;
      suite.timings = bench_timings;
      suite.oracle = suite.oracle || bench_oracle;
      std::vector<bpp::BenchRow> rows = bpp::RunBench(suite);
      EmitText(bpp::BenchCsv(rows, bench_timings), csv_path);
      if (!json_path.empty()) Emit(bpp::BenchJson(suite, rows), json_path);
      return 0;
    }
    if (*check) {
      bpp::Instance inst = bpp::LoadInstance(instance_path);
      bpp::Packing p = bpp::LoadPacking(inst, packing_path);
      std::vector<std::string> errors = bpp::ValidatePacking(inst, p, true);
      if (errors.empty()) {
        std::cout << "valid: " << p.num_bins() << " bins, lower bound " << LowerBound(inst)
                  << "\n";
        return 0;
      }
      for (const std::string& e : errors) std::cout << "invalid: " << e << "\n";
      return 1;
    }
  } catch (const bpp::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const bpp::ContractViolation& e) {
    std::cerr << "contract violation: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
