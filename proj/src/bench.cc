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

#include "bpp/bench.h"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <thread>

#include "bpp/greedy.h"
#include "bpp/oracle.h"
#include "bpp/pipeline.h"

namespace bpp {

PricingMode ParsePricing(const std::string& name) {
  if (name == "auto") return PricingMode::kAuto;
  if (name == "exact") return PricingMode::kExact;
  if (name == "fptas") return PricingMode::kFptas;
  throw InvalidInput("unknown pricing mode \"" + name + "\" (auto, exact, fptas)");
}

BenchSuite ParseSuite(const std::string& text, const std::string& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(source + ": " + e.what());
  }
  BenchSuite s;
  try {
    auto rational = [&](const char* key, Rational& out) {
      if (!doc.contains(key)) return;
      auto r = ParseRational(doc[key].get<std::string>());
      if (!r) throw InvalidInput(source + ": bad \"" + key + "\"");
      out = *r;
    };
    rational("epsilon", s.epsilon);
    rational("delta", s.delta);
    s.test_mode = doc.value("test_mode", false);
    for (const auto& o : doc.value("overrides", nlohmann::json::array())) {
      ApplyOverride(s.overrides, o.get<std::string>());
    }
    s.pricing = ParsePricing(doc.value("pricing", std::string("auto")));
    s.oracle = doc.value("oracle", false);
    s.oracle_max_n = doc.value("oracle_max_n", 14);
    s.oracle_time_limit_s = doc.value("oracle_time_limit_s", 30.0);
    s.solvers = doc.value("solvers", std::vector<std::string>{"afptas"});
    for (const std::string& name : s.solvers) {
      if (name != "afptas" && name != "ffd" && name != "greedy" && name != "exact") {
        throw InvalidInput(source + ": unknown solver \"" + name + "\"");
      }
    }
    for (const auto& j : doc.value("specs", nlohmann::json::array())) {
      BenchSpec b;
      b.name = j.value("name", "spec" + std::to_string(s.specs.size() + 1));
      b.count = j.value("count", 1);
      GeneratorSpec& g = b.gen;
      g.n = j.value("n", g.n);
      g.groups = j.value("groups", g.groups);
      g.k_min = j.value("k_min", g.k_min);
      g.k_max = j.value("k_max", g.k_max);
      g.distribution = ParseDistribution(j.value("distribution", std::string("uniform")));
      g.seed = j.value("seed", g.seed);
      g.grid = j.value("grid", g.grid);
      g.t = j.value("t", g.t);
      g.spread = j.value("spread", g.spread);
      g.heavy_percent = j.value("heavy_percent", g.heavy_percent);
      if (j.contains("band")) {
        auto r = ParseRational(j["band"].get<std::string>());
        if (!r) throw InvalidInput(source + ": bad band in " + b.name);
        g.band = *r;
      }
      s.specs.push_back(std::move(b));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(source + ": " + e.what());
  }
  return s;
}

namespace {

struct Task {
  int spec;
  uint64_t seed;
  std::string solver;
};

std::string Ratio(int64_t bins, int64_t opt) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f",
                static_cast<double>(bins) / static_cast<double>(opt));
  return buf;
}

BenchRow RunCell(const BenchSuite& suite, const ConstantSet& k, const Task& t, int cell) {
  const BenchSpec& spec = suite.specs[t.spec];
  BenchRow row;
  row.cell = cell;
  row.spec = spec.name;
  row.seed = t.seed;
  row.solver = t.solver;
  auto start = std::chrono::steady_clock::now();
  try {
    GeneratorSpec g = spec.gen;
    g.seed = t.seed;
    Instance inst = GenerateInstance(g);
    row.n = inst.n();
    row.groups = inst.num_groups();
    row.lower_bound = inst.empty() ? 0
                                   : std::max<int64_t>(Ceil(inst.TotalSize()).get_si(),
                                                       CardinalityBound(inst));
    Packing p;
    if (t.solver == "afptas") {
      SolveOptions opt;
      opt.pricing = suite.pricing;
      SolveResult r = GenAfptas(inst, k, opt);
      p = r.packing;
      row.lp_bound = ToString(r.lp_lower_bound);
    } else if (t.solver == "ffd") {
      p = FirstFitDecreasing(inst);
    } else if (t.solver == "greedy") {
      p = Greedy(inst, suite.delta);
    } else {
      OracleLimits lim;
      lim.time_limit_s = suite.oracle_time_limit_s;
      OracleResult r = ExactOpt(inst, lim);
      p = r.packing;
      if (r.status != OracleStatus::kOptimal) row.status = "cap";
    }
    row.bins = p.num_bins();
    std::vector<std::string> errors = ValidatePacking(inst, p, true);
    if (!errors.empty()) {
      row.status = "invalid";
      row.error = errors.front();
    } else if (row.status.empty()) {
      row.status = "ok";
    }
    if (suite.oracle && inst.n() <= suite.oracle_max_n) {
      OracleLimits lim;
      lim.time_limit_s = suite.oracle_time_limit_s;
      OracleResult r = ExactOpt(inst, lim);
      if (r.status == OracleStatus::kOptimal) {
        row.opt = std::to_string(r.bins);
        if (r.bins > 0) row.ratio = Ratio(row.bins, r.bins);
      }
    }
  } catch (const std::exception& e) {
    row.status = "error";
    row.error = e.what();
  }
  std::chrono::duration<double, std::milli> el = std::chrono::steady_clock::now() - start;
  row.wall_ms = el.count();
  return row;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::vector<BenchRow> RunBench(const BenchSuite& suite) {
  std::vector<Task> tasks;
  for (size_t s = 0; s < suite.specs.size(); ++s) {
    for (int c = 0; c < suite.specs[s].count; ++c) {
      for (const std::string& solver : suite.solvers) {
        tasks.push_back(Task{static_cast<int>(s), suite.specs[s].gen.seed + c, solver});
      }
    }
  }
  std::vector<BenchRow> rows(tasks.size());
  if (tasks.empty()) return rows;
  ConstantSet k = MakeConstants(suite.epsilon, suite.overrides, suite.test_mode);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < tasks.size(); i = next++) {
      rows[i] = RunCell(suite, k, tasks[i], static_cast<int>(i) + 1);
    }
  };
  const int n = std::max(1, std::min<int>(suite.workers, static_cast<int>(tasks.size())));
  std::vector<std::thread> pool;
  for (int w = 1; w < n; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  return rows;
}

std::string BenchCsv(const std::vector<BenchRow>& rows, bool timings) {
  std::ostringstream out;
  out << "schema,cell,spec,seed,n,groups,solver,status,bins,lower_bound,lp_bound,opt,"
         "ratio,error";
  if (timings) out << ",wall_ms";
  out << "\n";
  for (const BenchRow& r : rows) {
    out << kBenchSchemaVersion << "," << r.cell << "," << CsvField(r.spec) << "," << r.seed
        << "," << r.n << "," << r.groups << "," << r.solver << "," << r.status << ","
        << r.bins << "," << r.lower_bound << "," << r.lp_bound << "," << r.opt << ","
        << r.ratio << "," << CsvField(r.error);
    if (timings) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", r.wall_ms);
      out << "," << buf;
    }
    out << "\n";
  }
  return out.str();
}

nlohmann::json BenchJson(const BenchSuite& suite, const std::vector<BenchRow>& rows) {
  nlohmann::json j;
  j["schema"] = kBenchSchemaVersion;
  j["epsilon"] = ToString(suite.epsilon);
  j["test_mode"] = suite.test_mode;
  j["solvers"] = suite.solvers;
  nlohmann::json arr = nlohmann::json::array();
  for (const BenchRow& r : rows) {
    nlohmann::json row = {{"cell", r.cell},        {"spec", r.spec},
                          {"seed", r.seed},        {"n", r.n},
                          {"groups", r.groups},    {"solver", r.solver},
                          {"status", r.status},    {"bins", r.bins},
                          {"lower_bound", r.lower_bound}, {"lp_bound", r.lp_bound},
                          {"opt", r.opt},          {"ratio", r.ratio},
                          {"error", r.error}};
    if (suite.timings) row["wall_ms"] = r.wall_ms;
    arr.push_back(row);
  }
  j["rows"] = arr;
  return j;
}

}  // namespace bpp
