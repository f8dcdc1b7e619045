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

#include "bpp/pipeline.h"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>

#include "bpp/evict.h"
#include "bpp/partition_pack.h"
#include "bpp/polytope.h"
#include "bpp/reduce.h"
#include "bpp/shift.h"

namespace bpp {

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double Lap() {
    auto now = std::chrono::steady_clock::now();
    std::chrono::duration<double> d = now - start_;
    start_ = now;
    return d.count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

std::string PrototypeText(const Prototype& p) {
  std::string out;
  for (const auto& [c, v] : p) out += ToString(c) + " " + ToString(v) + "\n";
  return out;
}

void Dump(const std::string& dir, const std::string& name, const std::string& text) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  std::ofstream f(std::filesystem::path(dir) / name);
  f << text;
}

}  // namespace

Packing AfptasStructured(const Instance& inst, const ConstantSet& k,
                         const SolveOptions& opt, SolveResult* result) {
  SolveResult local;
  SolveResult& res = result ? *result : local;
  StageStats& st = res.stages;
  if (inst.empty()) return Packing{};
  const int massive = CountMassiveGroups(inst, k.epsilon);
  if (massive > 0 && std::log(static_cast<long double>(massive)) > k.K_log) {
    throw ContractViolation("pipeline", "instance is not eps-structured");
  }
  Timer t;

  ConfigLpResult lp = SolveConfigurationLp(inst, k.epsilon, opt.pricing);
  res.timings["lp"] = t.Lap();
  res.lp_lower_bound = lp.master_value;
  st.lp_columns = lp.columns;
  st.lp_iterations = lp.iterations;
  st.lp_pivots = lp.pivots;
  st.lp_float_pivots = lp.float_pivots;
  st.exact_pricing = lp.exact_pricing;
  st.x_norm = Norm(lp.x);
  st.x_support = static_cast<int>(lp.x.size());
  Dump(opt.dump_dir, "x.txt", PrototypeText(lp.x));

  EvictStats es;
  Prototype y = Evict(inst, lp.x, k, opt.check_polytopes, &es);
  res.timings["evict"] = t.Lap();
  st.y_norm = Norm(y);
  st.y_support = static_cast<int>(y.size());
  st.capped = es.capped;
  st.max_frequency = es.max_frequency;
  st.soft_failures.insert(st.soft_failures.end(), es.soft_failures.begin(),
                          es.soft_failures.end());
  Dump(opt.dump_dir, "y.txt", PrototypeText(y));

  ShiftResult sr = Shift(inst, y, k, opt.check_polytopes);
  res.timings["shift"] = t.Lap();
  st.z_norm = Norm(sr.z);
  st.z_support = static_cast<int>(sr.z.size());
  st.important_groups = static_cast<int>(sr.classes.groups.important.size());
  for (const std::string& e : CheckClasses(inst, y, k, sr.classes)) {
    throw ContractViolation("shift", e);
  }
  Dump(opt.dump_dir, "z.txt", PrototypeText(sr.z));
  Dump(opt.dump_dir, "classes.csv", DumpClassTable(inst, y, sr.classes));
  if (!opt.dump_dir.empty()) {
    Dump(opt.dump_dir, "z_polytope.txt",
         DumpInequalities(BuildPolytope(inst, sr.z, k.epsilon, true)));
  }

  PartitionStats ps;
  NicePartition np = Partition(inst, sr.z, k, &ps);
  res.timings["partition"] = t.Lap();
  st.z_star_norm = ps.z_star_norm;
  st.partition_size = np.size.get_str();
  st.categories = static_cast<int>(np.categories.size());
  st.fractional = static_cast<int>(np.fractional.size());
  st.matched = np.matched;

  PackStats pk;
  Packing a = Pack(inst, np, k, &pk);
  res.timings["pack"] = t.Lap();
  st.structured_bins = a.num_bins();
  st.pack_extra_bins = pk.extra_bins;
  return a;
}

SolveResult GenAfptas(const Instance& inst, const ConstantSet& k,
                      const SolveOptions& opt) {
  SolveResult res;
  res.epsilon_used = k.epsilon;
  if (inst.empty()) return res;
  Timer t;
  Reduction red = Reduce(inst, k);
  res.timings["reduce"] = t.Lap();
  res.stages.pivot = red.meta.w;
  res.stages.kappa = red.meta.kappa;
  res.stages.gamma = static_cast<int>(red.meta.gamma.size());
  res.stages.omega = static_cast<int>(red.meta.omega.size());

  Packing a = AfptasStructured(red.structured, k, opt, &res);
  t.Lap();
  ReconstructStats rs;
  res.packing = Reconstruct(inst, k, red.meta, a, &rs);
  res.timings["reconstruct"] = t.Lap();
  res.stages.fill_r = static_cast<int>(rs.fill.R.size());
  res.stages.discarded = static_cast<int>(rs.discarded.size());
  res.stages.greedy_bins = rs.greedy_bins;
  res.bins = res.packing.num_bins();
  return res;
}

AutoEpsilonResult AutoEpsilon(const Instance& inst) {
  // ln W = e^(100^17) + ln(1 + (s + V) / c), so ln ln W = 100^17 + d with
  // 0 <= d < 1 whenever s + V is far below c, which holds for any instance
  // that fits in memory.
  (void)inst;
  AutoEpsilonResult r;
  BigInt n;
  mpz_ui_pow_ui(n.get_mpz_t(), 100, 17);
  r.log_log_w_floor = n;
  BigInt root;
  mpz_root(root.get_mpz_t(), n.get_mpz_t(), 17);
  // floor((n + d)^(1/17)) = root unless n + 1 reaches (root + 1)^17.
  BigInt next;
  BigInt root1 = root + 1;
  mpz_pow_ui(next.get_mpz_t(), root1.get_mpz_t(), 17);
  if (next <= n + 1) root = root1;
  r.epsilon = Rational(1, 1) / Rational(root);
  r.theory_mode = true;
  r.recommended = Rational(1, 11);
  return r;
}

nlohmann::json ReportJson(const SolveResult& r, bool timings) {
  const StageStats& s = r.stages;
  nlohmann::json j;
  j["bins"] = r.bins;
  j["lp_lower_bound"] = ToString(r.lp_lower_bound);
  j["epsilon"] = ToString(r.epsilon_used);
  j["stages"] = {
      {"reduce", {{"pivot", s.pivot}, {"kappa", s.kappa}, {"gamma", s.gamma},
                  {"omega", s.omega}}},
      {"lp", {{"columns", s.lp_columns}, {"iterations", s.lp_iterations},
              {"pivots", s.lp_pivots}, {"float_pivots", s.lp_float_pivots},
              {"exact_pricing", s.exact_pricing}, {"x_norm", ToString(s.x_norm)},
              {"x_support", s.x_support}}},
      {"evict", {{"y_norm", ToString(s.y_norm)}, {"y_support", s.y_support},
                 {"capped", s.capped}, {"max_frequency", ToString(s.max_frequency)}}},
      {"shift", {{"z_norm", ToString(s.z_norm)}, {"z_support", s.z_support},
                 {"important_groups", s.important_groups}}},
      {"partition", {{"z_star_norm", ToString(s.z_star_norm)},
                     {"size", s.partition_size}, {"categories", s.categories},
                     {"fractional", s.fractional}, {"matched", s.matched}}},
      {"pack", {{"bins", s.structured_bins}, {"extra_bins", s.pack_extra_bins}}},
      {"reconstruct", {{"r", s.fill_r}, {"discarded", s.discarded},
                       {"greedy_bins", s.greedy_bins}}},
  };
  j["soft_failures"] = s.soft_failures;
  if (timings) j["timings"] = r.timings;
  return j;
}

}  // namespace bpp
