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
#include "doctest.h"
#include "helpers.h"
#include "oracles/brute.h"

namespace bpp {
namespace {

using test::C;
using test::Make;
using test::Q;

TEST_CASE("pricing examples") {
  Instance three = Make({{"2/5", 1}, {"2/5", 1}, {"2/5", 1}}, {{1, 2}});
  std::vector<Rational> zero(3, Rational(0)), ones(3, Rational(1));
  for (PricingMode mode : {PricingMode::kExact, PricingMode::kFptas}) {
    PricingResult z = PriceConfiguration(three, zero, mode, Q("1/4"));
    CHECK(z.value == 0);
    PricingResult r = PriceConfiguration(three, ones, mode, Q("1/4"));
    CHECK(r.value == 2);
    CHECK(r.config.size() == 2);
    CHECK(IsConfiguration(three, r.config));
  }
  Instance conflict = Make({{"3/5", 1}, {"3/5", 2}}, {{1, 1}, {2, 1}});
  CHECK(PriceConfiguration(conflict, {1, 1}, PricingMode::kExact, Q("1/4")).value == 1);
}

TEST_CASE("exact pricing matches subset enumeration; fptas within its factor") {
  std::mt19937_64 rng(5);
  const Rational eps_prime = Q("1/8");
  for (int round = 0; round < 150; ++round) {
    Instance inst = test::Random(rng, 1 + static_cast<int>(rng() % 10), 3, 3, 1, 70, 100);
    std::vector<Rational> w(inst.n());
    for (auto& x : w) x = test::Frac(static_cast<int64_t>(rng() % 20), 7);
    Rational best = 0;
    for (uint32_t mask : brute::AllConfigurations(inst)) {
      Rational v = 0;
      for (int i = 0; i < inst.n(); ++i) {
        if (mask >> i & 1) v += w[i];
      }
      if (v > best) best = v;
    }
    PricingResult e = PriceConfiguration(inst, w, PricingMode::kExact, eps_prime);
    CHECK(e.value == best);
    CHECK(IsConfiguration(inst, e.config));
    PricingResult f = PriceConfiguration(inst, w, PricingMode::kFptas, eps_prime);
    CHECK(IsConfiguration(inst, f.config));
    CHECK(f.value >= (1 - eps_prime) * best);
    CHECK(f.value <= best);
  }
}

TEST_CASE("configuration LP examples") {
  const Rational eps = Q("1/11");
  ConfigLpResult a = SolveConfigurationLp(Make({{"3/5", 1}, {"3/5", 1}}, {{1, 1}}), eps);
  CHECK(Norm(a.x) == 2);
  CHECK(a.x.at(C({1})) == 1);
  CHECK(a.x.at(C({2})) == 1);

  ConfigLpResult b = SolveConfigurationLp(Make({{"2/5", 1}, {"2/5", 2}}, {{1, 1}, {2, 1}}), eps);
  CHECK(Norm(b.x) == 1);
  CHECK(b.x.at(C({1, 2})) == 1);

  ConfigLpResult c =
      SolveConfigurationLp(Make({{"3/5", 1}, {"3/5", 1}, {"3/5", 1}}, {{1, 3}}), eps);
  CHECK(Norm(c.x) == 3);
}

TEST_CASE("normalize_to_equality") {
  Instance inst = Make({{"1/2", 1}, {"1/4", 2}}, {{1, 1}, {2, 1}});
  Prototype tight = {{C({1, 2}), 1}};
  CHECK(NormalizeToEquality(inst, tight) == tight);

  Prototype over = {{C({1}), Q("3/2")}, {C({2}), 1}};
  Prototype n1 = NormalizeToEquality(inst, over);
  CHECK(n1.at(C({1})) == 1);
  CHECK(n1.at(Configuration()) == Q("1/2"));
  CHECK(Norm(n1) == Norm(over));

  Prototype two = {{C({1, 2}), 1}, {C({2}), Q("1/2")}};
  Prototype n2 = NormalizeToEquality(inst, two);
  CHECK(n2.at(C({1, 2})) == 1);
  CHECK(n2.at(Configuration()) == Q("1/2"));
  CHECK(n2.size() == 2);

  Prototype under = {{C({1}), 1}};
  CHECK_THROWS_AS(NormalizeToEquality(inst, under), InvalidInput);
}

TEST_CASE("column generation equals the full configuration LP (n <= 12)") {
  std::mt19937_64 rng(99);
  const Rational eps = Q("1/11");
  for (int round = 0; round < 40; ++round) {
    Instance inst = test::Random(rng, 1 + static_cast<int>(rng() % 12), 4, 3, 5, 70, 100);
    ConfigLpResult r = SolveConfigurationLp(inst, eps, PricingMode::kExact);
    Rational full = brute::FullConfigurationLp(inst);
    CHECK(r.master_value == full);
    CHECK(Norm(r.x) == r.master_value);
    for (const Rational& c : Coverage(inst, r.x)) CHECK(c == 1);
    for (const auto& [cfg, v] : r.x) {
      CHECK(IsConfiguration(inst, cfg));
      CHECK(v > 0);
    }
    ConfigLpResult f = SolveConfigurationLp(inst, eps, PricingMode::kFptas);
    CHECK(f.master_value >= full);
    CHECK(f.master_value <= (1 + eps) * full);
  }
}

}  // namespace
}  // namespace bpp
