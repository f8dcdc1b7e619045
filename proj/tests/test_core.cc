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

#include <cmath>
#include <random>

#include "bpp/core.h"
#include "doctest.h"
#include "helpers.h"

namespace bpp {
namespace {

using test::C;
using test::Make;
using test::Q;

TEST_CASE("validate sorts by size and keeps input order on ties") {
  Instance inst = Make({{"1/3", 1}, {"1/2", 1}, {"1/2", 1}}, {{1, 2}});
  REQUIRE(inst.n() == 3);
  CHECK(inst.size(1) == Q("1/2"));
  CHECK(inst.item(1).label == 2);
  CHECK(inst.item(2).label == 3);
  CHECK(inst.item(3).label == 1);
  CHECK(inst.group(0).members == std::vector<int>{1, 2, 3});
}

TEST_CASE("validate reports bad sizes, caps and memberships") {
  RawInstance raw;
  raw.groups = {{1, 1, {}}, {2, 0, {}}};
  raw.items = {{1, Q("3/2"), 1}, {2, Q("0"), 1}, {3, Q("1/4"), std::nullopt}};
  ValidationResult v = ValidateInstance(raw);
  CHECK_FALSE(v.instance);
  auto has = [&](const std::string& needle) {
    for (const auto& e : v.errors) {
      if (e.find(needle) != std::string::npos) return true;
    }
    return false;
  };
  CHECK(has("item 1: size out of (0,1]"));
  CHECK(has("item 2: size out of (0,1]"));
  CHECK(has("k(G) < 1"));
  CHECK(has("item 3: in no group"));

  RawInstance two;
  two.groups = {{1, 1, {1}}, {2, 1, {1}}};
  two.items = {{1, Q("1/4"), std::nullopt}};
  ValidationResult w = ValidateInstance(two);
  REQUIRE(w.errors.size() == 1);
  CHECK(w.errors[0].find("not a partition") != std::string::npos);

  RawInstance dup;
  dup.groups = {{1, 1, {}}};
  dup.items = {{1, Q("1/4"), 1}, {1, Q("1/5"), 1}};
  CHECK_FALSE(ValidateInstance(dup).instance);
}

TEST_CASE("is_configuration") {
  Instance a = Make({{"3/5", 1}, {"3/5", 2}}, {{1, 1}, {2, 1}});
  CHECK(IsConfiguration(a, Configuration()));
  CHECK_FALSE(IsConfiguration(a, C({1, 2})));
  Instance b = Make({{"1/4", 1}, {"1/4", 1}}, {{1, 1}});
  CHECK_FALSE(IsConfiguration(b, C({1, 2})));
  CHECK(IsConfiguration(b, C({1})));
}

TEST_CASE("cardinality bound") {
  std::vector<std::pair<std::string, int64_t>> five(5, {"1/10", 1});
  CHECK(CardinalityBound(Make(five, {{1, 2}})) == 3);
  std::vector<std::pair<std::string, int64_t>> mix;
  for (int i = 0; i < 4; ++i) mix.push_back({"1/20", 1});
  for (int i = 0; i < 7; ++i) mix.push_back({"1/20", 2});
  CHECK(CardinalityBound(Make(mix, {{1, 4}, {2, 3}})) == 3);
  CHECK(CardinalityBound(Make({{"1/2", 1}}, {{1, 1}})) == 1);
  CHECK(CardinalityBound(Make({}, {})) == 0);
}

TEST_CASE("fit_slot") {
  Instance inst = Make({{"1/2", 1}, {"1/3", 1}, {"1/4", 1}, {"1/3", 2}}, {{1, 3}, {2, 1}});
  // ids: 1 = 1/2, 2 = 1/3 (group 1), 3 = 1/3 (group 2), 4 = 1/4
  CHECK(FitSlot(inst, 2) == std::vector<int>{2, 4});
  CHECK(FitSlot(inst, 1) == std::vector<int>{1, 2, 4});
  CHECK(FitSlot(inst, 4) == std::vector<int>{4});
}

TEST_CASE("fit_config") {
  const Rational eps = Q("1/11");
  Instance inst = Make({{"1/2", 1}, {"1/2", 1}, {"1/121", 1}, {"1/120", 1}, {"1/200", 1}},
                       {{1, 5}});
  CHECK(FitConfig(inst, C({1, 2}), eps).empty());
  CHECK(FitConfig(inst, Configuration(), eps) == std::vector<int>{4, 5});
  Instance nine = Make({{"9/10", 1}, {"1/121", 2}, {"1/110", 2}}, {{1, 1}, {2, 2}});
  CHECK(FitConfigThreshold(nine, C({1}), eps) == Q("1/121"));
  CHECK(FitConfig(nine, C({1}), eps) == std::vector<int>{3});
}

TEST_CASE("constants at eps = 1/11") {
  ConstantSet k = MakeConstants(Q("1/11"));
  CHECK(k.alpha.value == 161051);
  CHECK(k.upsilon.value == 363);
  CHECK(std::fabs(static_cast<double>(k.K_log) - 121 * std::log(11.0)) < 1e-9);
  CHECK(k.K_log > 290.0L);
  CHECK(k.K_log < 290.2L);
  CHECK(k.config_size_cap.value == 25937424601LL);
}

TEST_CASE("constants reject inadmissible eps outside test mode") {
  CHECK_THROWS_AS(MakeConstants(Q("1/10")), InvalidInput);
  CHECK_THROWS_AS(MakeConstants(Q("2/23")), InvalidInput);
  CHECK_NOTHROW(MakeConstants(Q("1/3"), {}, true));
  Overrides ov;
  ApplyOverride(ov, "alpha=3");
  CHECK(*ov.alpha == 3);
  CHECK_THROWS_AS(MakeConstants(Q("1/11"), ov, false), InvalidInput);
  CHECK(MakeConstants(Q("1/11"), ov, true).alpha.value == 3);
}

TEST_CASE("validate_packing accepts exactly disjoint configurations") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 200; ++round) {
    Instance inst = test::Random(rng, 8, 3, 2, 1, 60, 100);
    Packing p;
    std::vector<int> ids;
    for (int id = 1; id <= inst.n(); ++id) {
      if (rng() % 2) ids.push_back(id);
    }
    bool expect = true;
    std::vector<int> cur;
    for (int id : ids) {
      cur.push_back(id);
      if (rng() % 3 == 0) {
        expect = expect && IsConfiguration(inst, cur);
        p.bins.push_back(Configuration(cur));
        cur.clear();
      }
    }
    if (!cur.empty()) {
      expect = expect && IsConfiguration(inst, cur);
      p.bins.push_back(Configuration(cur));
    }
    if (rng() % 4 == 0 && !ids.empty()) {
      p.bins.push_back(C({ids.front()}));
      expect = false;
    }
    CHECK(ValidatePacking(inst, p, false).empty() == expect);
  }
}

TEST_CASE("sizes are non-increasing and fit relations are monotone") {
  std::mt19937_64 rng(11);
  const Rational eps = Q("1/11");
  for (int round = 0; round < 50; ++round) {
    Instance inst = test::Random(rng, 12, 3, 3, 1, 100, 100);
    for (int id = 2; id <= inst.n(); ++id) CHECK(inst.size(id - 1) >= inst.size(id));
    for (int l = 1; l <= inst.n(); ++l) {
      std::vector<int> fit = FitSlot(inst, l);
      CHECK(std::binary_search(fit.begin(), fit.end(), l));
      for (int j = 1; j <= inst.n(); ++j) {
        bool expect = inst.group_of(j) == inst.group_of(l) && inst.size(j) <= inst.size(l);
        CHECK(std::binary_search(fit.begin(), fit.end(), j) == expect);
      }
    }
    Configuration a = C({static_cast<int>(rng() % inst.n()) + 1});
    Configuration b = C({a.items[0], static_cast<int>(rng() % inst.n()) + 1});
    if (!IsConfiguration(inst, b)) continue;
    std::vector<int> fa = FitConfig(inst, a, eps), fb = FitConfig(inst, b, eps);
    CHECK(std::includes(fa.begin(), fa.end(), fb.begin(), fb.end()));
  }
}

}  // namespace
}  // namespace bpp
