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

#include <filesystem>
#include <random>

#include "bpp/oracle.h"
#include "bpp/pipeline.h"
#include "doctest.h"
#include "helpers.h"
#include "oracles/brute.h"

namespace bpp {
namespace {

using test::C;
using test::Make;
using test::Q;

const ConstantSet kK = MakeConstants(Q("1/11"));

int64_t LowerBound(const Instance& inst) {
  int64_t v = 0;
  for (const Group& g : inst.groups()) {
    v = std::max<int64_t>(v, (static_cast<int64_t>(g.members.size()) + g.k - 1) / g.k);
  }
  return std::max<int64_t>(v, Ceil(inst.TotalSize()).get_si());
}

TEST_CASE("structured examples") {
  CHECK(AfptasStructured(Instance(), kK).num_bins() == 0);
  CHECK(AfptasStructured(Make({{"1/2", 1}}, {{1, 1}}), kK).num_bins() == 1);
  std::mt19937_64 rng(97);
  for (int round = 0; round < 10; ++round) {
    Instance inst = test::Random(rng, 10, 3, 3, 1, 100, 100);
    Packing p = AfptasStructured(inst, kK);
    CHECK(brute::CheckPacking(inst, p).empty());
    CHECK(p.num_bins() >= LowerBound(inst));
  }
}

TEST_CASE("gen examples") {
  SolveResult e = GenAfptas(Instance(), kK);
  CHECK(e.bins == 0);
  CHECK(e.packing.bins.empty());

  Instance inst = Make({{"1/2", 1}, {"1/3", 2}, {"1/4", 1}, {"1/5", 2}}, {{1, 1}, {2, 2}});
  SolveResult g = GenAfptas(inst, kK);
  CHECK(g.bins == AfptasStructured(inst, kK).num_bins());
  CHECK(g.stages.gamma == 0);
  CHECK(g.stages.discarded == 0);

  std::mt19937_64 rng(101);
  for (int round = 0; round < 10; ++round) {
    RawInstance raw;
    for (int g = 1; g <= 4; ++g) raw.groups.push_back({g, 1 + static_cast<int64_t>(rng() % 2), {}});
    for (int i = 1; i <= 12; ++i) {
      raw.items.push_back({i, test::Frac(1 + static_cast<int64_t>(rng() % 70), 100),
                           1 + static_cast<int64_t>(rng() % 4)});
    }
    Instance r = MakeInstance(raw);
    SolveResult s = GenAfptas(r, kK);
    CHECK(brute::CheckPacking(r, s.packing).empty());
    OracleResult opt = ExactOpt(r);
    REQUIRE(opt.status == OracleStatus::kOptimal);
    CHECK(s.bins >= opt.bins);
    CHECK(s.lp_lower_bound / (1 + kK.epsilon) <= opt.bins);
  }

  std::vector<std::pair<std::string, int64_t>> five(5, {"1/100", 1});
  CHECK(GenAfptas(Make(five, {{1, 1}}), kK).bins >= 5);
}

TEST_CASE("gen on reduced instances with test overrides") {
  Overrides ov;
  ov.kappa = 1;
  ConstantSet k = MakeConstants(Q("1/11"), ov, true);
  std::mt19937_64 rng(103);
  for (int round = 0; round < 10; ++round) {
    Instance inst = test::Random(rng, 6 + static_cast<int>(rng() % 15), 4, 3, 1, 60, 100);
    SolveResult s = GenAfptas(inst, k);
    CHECK(brute::CheckPacking(inst, s.packing).empty());
    CHECK(s.bins == s.packing.num_bins());
  }
}

TEST_CASE("auto epsilon") {
  AutoEpsilonResult a = AutoEpsilon(Make({{"1/2", 1}}, {{1, 1}}));
  CHECK(a.epsilon == Q("1/100"));
  CHECK(a.theory_mode);
  CHECK(a.recommended == Q("1/11"));
  CHECK(AutoEpsilon(Instance()).epsilon == Q("1/100"));
}

TEST_CASE("report and dumps") {
  Instance inst = Make({{"1/2", 1}, {"1/3", 2}, {"1/4", 1}}, {{1, 1}, {2, 1}});
  SolveOptions opt;
  std::filesystem::path dir = std::filesystem::temp_directory_path() / "bpp_pipeline_dump";
  std::filesystem::remove_all(dir);
  opt.dump_dir = dir.string();
  SolveResult r = GenAfptas(inst, kK, opt);
  for (const char* f : {"x.txt", "y.txt", "z.txt", "classes.csv", "z_polytope.txt"}) {
    CHECK(std::filesystem::exists(dir / f));
  }
  nlohmann::json j = ReportJson(r, false);
  CHECK(j["bins"] == r.bins);
  CHECK(j.contains("lp_lower_bound"));
  CHECK(j.contains("stages"));
  CHECK(j["epsilon"] == "1/11");
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace bpp
