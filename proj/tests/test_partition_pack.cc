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
#include "bpp/partition_pack.h"
#include "bpp/shift.h"
#include "doctest.h"
#include "helpers.h"
#include "oracles/brute.h"

namespace bpp {
namespace {

using test::C;
using test::Make;
using test::Q;

const ConstantSet kK = MakeConstants(Q("1/11"));

TEST_CASE("integralize") {
  Prototype whole = {{C({1}), 2}, {C({2}), 1}};
  CHECK(Integralize(whole) == whole);
  CHECK(Integralize({{C({1}), Q("3/2")}}) == Prototype{{C({1}), 2}});
  Prototype mixed = {{C({1}), Q("1/3")}, {C({2}), Q("5/2")}};
  Prototype up = Integralize(mixed);
  CHECK(up == Prototype{{C({1}), 1}, {C({2}), 3}});
  CHECK(Norm(up) - Norm(mixed) == Q("7/6"));
}

TEST_CASE("maximum matching") {
  AssignmentGraph empty;
  CHECK(MaximumMatching(empty).empty());

  AssignmentGraph one;
  one.left = {1};
  one.right = {SlotCopy{C({1}), 1, 1}};
  one.adj = {{0}};
  CHECK(MaximumMatching(one) == std::vector<int>{0});

  AssignmentGraph two;
  two.left = {1, 2};
  two.right = {SlotCopy{C({1}), 1, 1}, SlotCopy{C({1}), 1, 2}};
  two.adj = {{0, 1}, {0, 1}};
  std::vector<int> m = MaximumMatching(two);
  REQUIRE(m.size() == 2);
  CHECK(m[0] >= 0);
  CHECK(m[1] >= 0);
  CHECK(m[0] != m[1]);

  AssignmentGraph augment;
  augment.left = {1, 2};
  augment.right = {SlotCopy{C({1}), 1, 1}, SlotCopy{C({2}), 2, 1}};
  augment.adj = {{0, 1}, {0}};
  std::vector<int> a = MaximumMatching(augment);
  CHECK(a == std::vector<int>{1, 0});
}

TEST_CASE("partition examples") {
  NicePartition e = Partition(Instance(), {}, kK);
  CHECK(e.categories.empty());
  CHECK(e.size == 0);

  Instance single = Make({{"1/2", 1}}, {{1, 1}});
  NicePartition s = Partition(single, {{C({1}), 1}}, kK);
  CHECK(s.categories == std::vector<Configuration>{C({1})});
  CHECK(MaterializedBins(s) == std::vector<Configuration>{C({1})});
  CHECK(s.completions.empty());
  CHECK(s.size == 1);

  Instance two = Make({{"3/5", 1}, {"3/5", 1}}, {{1, 1}});
  NicePartition t = Partition(two, {{C({1}), 2}}, kK);
  CHECK(t.categories == std::vector<Configuration>{C({1})});
  CHECK(MaterializedBins(t) == std::vector<Configuration>{C({1}), C({2})});
  CHECK(t.matched == 2);
  CHECK(CheckNicePartition(two, t, kK).empty());
}

TEST_CASE("residual instance") {
  Instance inst = Make({{"1/4", 1}, {"1/4", 1}, {"1/20", 1}, {"1/30", 2}}, {{1, 3}, {2, 1}});
  SubInstance none = ResidualInstance(inst, Configuration(), {3, 4});
  CHECK(none.inst.size(1) == Q("1/20"));
  CHECK(none.inst.size(2) == Q("1/30"));
  CHECK(none.inst.k_of_item(1) == 3);
  SubInstance half = ResidualInstance(inst, C({1, 2}), {3, 4});
  CHECK(half.inst.size(1) == Q("1/10"));
  CHECK(half.inst.k_of_item(1) == 1);
  CHECK(half.inst.k_of_item(2) == 1);
  CHECK(half.parent == std::vector<int>{3, 4});
}

NicePartition OneCategory(const Configuration& c, long count, std::vector<int> d) {
  NicePartition np;
  np.categories = {c};
  np.families[c] = BinFamily{BigInt(count), {c}, std::nullopt};
  if (!d.empty()) np.completions[c] = std::move(d);
  np.size = count;
  return np;
}

TEST_CASE("pack examples") {
  Instance plain = Make({{"1/2", 1}, {"1/3", 2}}, {{1, 1}, {2, 1}});
  NicePartition np;
  np.categories = {C({1}), C({2})};
  np.families[C({1})] = BinFamily{BigInt(1), {C({1})}, std::nullopt};
  np.families[C({2})] = BinFamily{BigInt(1), {C({2})}, std::nullopt};
  np.size = 2;
  REQUIRE(CheckNicePartition(plain, np, kK).empty());
  Packing p = Pack(plain, np, kK);
  CHECK(p.bins == std::vector<Configuration>{C({1}), C({2})});

  // Completion items must not exceed eps^2, so the next two use eps = 1/3.
  const ConstantSet k3 = MakeConstants(Q("1/3"), {}, true);
  Instance ride = Make({{"1/2", 1}, {"1/20", 2}, {"1/20", 2}, {"1/20", 2}}, {{1, 1}, {2, 3}});
  NicePartition r = OneCategory(C({1}), 1, {2, 3, 4});
  REQUIRE(CheckNicePartition(ride, r, k3).empty());
  CHECK(ResidualInstance(ride, C({1}), {2, 3, 4}).inst.size(1) == Q("1/10"));
  Packing pr = Pack(ride, r, k3);
  CHECK(pr.bins == std::vector<Configuration>{C({1, 2, 3, 4})});

  std::vector<std::pair<std::string, int64_t>> items = {{"1/2", 1}};
  for (int i = 0; i < 10; ++i) items.emplace_back("1/10", 2);
  Instance over = Make(items, {{1, 1}, {2, 10}});
  std::vector<int> d;
  for (int id = 2; id <= 11; ++id) d.push_back(id);
  NicePartition o = OneCategory(C({1}), 2, d);
  REQUIRE(CheckNicePartition(over, o, k3).empty());
  PackStats stats;
  Packing po = Pack(over, o, k3, &stats);
  CHECK(brute::CheckPacking(over, po).empty());
  CHECK(stats.extra_bins > 0);
  CHECK(Rational(po.num_bins()) <= (1 + 2 * k3.epsilon) * 2 + 2);
  CHECK(stats.categories_completed == 1);
}

TEST_CASE("partition and pack after evict and shift") {
  std::mt19937_64 rng(61);
  for (int round = 0; round < 25; ++round) {
    Instance inst = test::Random(rng, 2 + static_cast<int>(rng() % 20), 4, 3, 1, 70, 100);
    Prototype x = SolveConfigurationLp(inst, kK.epsilon).x;
    Prototype y = Evict(inst, x, kK);
    ShiftResult s = Shift(inst, y, kK);
    PartitionStats ps;
    NicePartition np = Partition(inst, s.z, kK, &ps);
    CHECK(CheckNicePartition(inst, np, kK).empty());
    CHECK(ps.z_star_norm - ps.z_norm <= static_cast<long>(s.z.size()));
    int64_t kmax = np.max_config_size;
    CHECK(static_cast<int64_t>(np.fractional.size()) <=
          8 * kmax * kmax * np.support * np.support);
    int unmatched_left = 0;
    for (const auto& [c, d] : np.completions) unmatched_left += static_cast<int>(d.size());
    CHECK(np.matched + unmatched_left + static_cast<int>(np.fractional.size()) == inst.n());
    Packing p = Pack(inst, np, kK);
    CHECK(brute::CheckPacking(inst, p).empty());
  }
}

}  // namespace
}  // namespace bpp
