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

#include <random>

#include "bpp/config_lp.h"
#include "bpp/evict.h"
#include "bpp/polytope.h"
#include "bpp/shift.h"
#include "doctest.h"
#include "helpers.h"

namespace bpp {
namespace {

using test::C;
using test::Make;
using test::Q;

const ConstantSet kK = MakeConstants(Q("1/11"));

ConstantSet TestConstants(const std::string& eps, std::vector<std::string> overrides) {
  Overrides ov;
  for (const auto& o : overrides) ApplyOverride(ov, o);
  return MakeConstants(Q(eps), ov, true);
}

TEST_CASE("frequency") {
  CHECK(Frequency({{C({1, 2}), Q("1/2")}}, {}) == 0);
  CHECK(Frequency({{C({1, 2}), Q("1/2")}}, {1}) == Q("1/2"));
  CHECK(Frequency({{C({1, 2}), Q("1/2")}, {C({1}), Q("1/3")}}, {1, 2}) == Q("4/3"));
}

TEST_CASE("important groups") {
  Instance massive = Make({{"1/2", 1}, {"1/3", 2}}, {{1, 1}, {2, 1}});
  Prototype y = {{C({1}), 1}, {C({2}), 1}};
  ImportantGroups a = FindImportantGroups(massive, y, kK);
  CHECK(a.massive == std::vector<int>{0, 1});
  CHECK(a.important == std::vector<int>{0, 1});

  Instance dust = Make({{"1/200", 1}, {"1/300", 2}}, {{1, 1}, {2, 1}});
  ImportantGroups b = FindImportantGroups(dust, {{C({1, 2}), 1}}, kK);
  CHECK(b.massive.empty());
  CHECK(b.significant == std::vector<int>{0, 1});

  ConstantSet one = TestConstants("1/11", {"eta=1"});
  Prototype skew = {{C({1}), Q("1/2")}, {C({2}), Q("3/2")}};
  ImportantGroups c = FindImportantGroups(dust, skew, one);
  CHECK(c.significant == std::vector<int>{1});
}

TEST_CASE("classes") {
  Instance single = Make({{"1/2", 1}}, {{1, 1}});
  ClassFamily q1 = BuildClasses(single, {{C({1}), 1}}, kK);
  CHECK(q1.classes.at(0) == std::vector<std::vector<int>>{{1}});

  ConstantSet unit = TestConstants("1/11", {"threshold=1"});
  Instance four = Make({{"1/2", 1}, {"1/3", 1}, {"1/4", 1}, {"1/5", 1}}, {{1, 4}});
  Prototype y = {{C({1}), 1}, {C({2}), 1}, {C({3}), 1}, {C({4}), 1}};
  ClassFamily q2 = BuildClasses(four, y, unit);
  CHECK(q2.classes.at(0) == std::vector<std::vector<int>>{{1}, {2}, {3}, {4}});
  CHECK(CheckClasses(four, y, unit, q2).empty());

  ConstantSet high = TestConstants("1/11", {"threshold=10"});
  ClassFamily q3 = BuildClasses(four, y, high);
  CHECK(q3.classes.at(0) == std::vector<std::vector<int>>{{1, 2, 3, 4}});
  CHECK(CheckClasses(four, y, high, q3).empty());
}

TEST_CASE("projection") {
  Instance inst = Make({{"1/2", 1}, {"1/3", 1}, {"1/4", 1}, {"1/5", 2}}, {{1, 3}, {2, 1}});
  ClassFamily q;
  q.classes[0] = {{1, 2, 3}};
  CHECK(ProjectConfiguration(inst, C({2, 3}), q) == C({2, 3}));
  CHECK(ProjectConfiguration(inst, C({1}), q) == C({3}));
  CHECK(ProjectConfiguration(inst, C({4}), q) == Configuration());
}

TEST_CASE("shift examples") {
  const Rational& eps = kK.epsilon;
  ShiftResult e = Shift(Instance(), {{Configuration(), 1}}, kK);
  CHECK(e.z.size() == 1);
  CHECK(e.z.at(Configuration()) ==
        1 + 2 * Pow(eps, -kK.upsilon.value) + 4 * eps + Pow(eps, -3));

  Instance one = Make({{"1/2", 1}}, {{1, 1}});
  ShiftResult s = Shift(one, {{C({1}), 1}}, kK);
  const Rational t = Pow(eps, kK.upsilon.value);
  CHECK(s.z.at(C({1})) == (1 + 2 / t) + (t + 2));
  CHECK(s.z.at(Configuration()) == 4 * eps + Pow(eps, -3));
  CHECK(s.polytope_nonempty);
}

TEST_CASE("shift rejects inputs outside its conditions") {
  Instance inst = Make({{"1/2", 1}}, {{1, 1}});
  CHECK_THROWS_AS(Shift(inst, {{C({1}), 3}}, kK), ContractViolation);
}

// LP -> Evict -> Shift with a small threshold, so classes hold several items
// and configurations really move.
TEST_CASE("shift contract under a test threshold") {
  std::mt19937_64 rng(47);
  for (const char* thr : {"1", "2", "1/2"}) {
    ConstantSet k = TestConstants("1/11", {std::string("threshold=") + thr});
    for (int round = 0; round < 12; ++round) {
      Instance inst = test::Random(rng, 4 + static_cast<int>(rng() % 10), 3, 4, 10, 60, 100);
      Prototype x = SolveConfigurationLp(inst, k.epsilon).x;
      Prototype y = Evict(inst, x, k);
      ShiftResult r = Shift(inst, y, k);
      CHECK(CheckClasses(inst, y, k, r.classes).empty());
      CHECK(r.polytope_nonempty);
      for (const auto& [g, classes] : r.classes.classes) {
        for (size_t i = 0; i + 1 < classes.size(); ++i) {
          for (int a : classes[i]) {
            std::vector<int> fit = FitSlot(inst, a);
            for (int b : classes[i + 1]) {
              CHECK(std::binary_search(fit.begin(), fit.end(), b));
            }
          }
        }
      }
      for (const auto& [c, v] : y) {
        Configuration p = ProjectConfiguration(inst, c, r.classes);
        CHECK(SizeOf(inst, p) <= SizeOf(inst, c));
        CHECK(p.size() <= c.size());
      }
      const Rational t = r.classes.threshold;
      const Rational groups = static_cast<long>(r.classes.groups.important.size());
      CHECK(Norm(r.z) == (1 + 2 / t) * Norm(y) + 4 * k.epsilon * Norm(y) +
                             Pow(k.epsilon, -3) + groups * (t + 2));
    }
  }
}

}  // namespace
}  // namespace bpp
