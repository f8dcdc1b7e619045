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

#include "bpp/generators.h"
#include "bpp/io.h"
#include "doctest.h"
#include "helpers.h"

namespace bpp {
namespace {

using test::Q;

TEST_CASE("generation is deterministic") {
  for (SizeDistribution d : {SizeDistribution::kUniform, SizeDistribution::kClustered,
                             SizeDistribution::kHeavyDust, SizeDistribution::kSmall}) {
    GeneratorSpec spec;
    spec.n = 40;
    spec.distribution = d;
    spec.seed = 12345;
    CHECK(InstanceJson(GenerateInstance(spec)) == InstanceJson(GenerateInstance(spec)));
    spec.seed = 12346;
    GeneratorSpec other = spec;
    other.seed = 12345;
    CHECK(InstanceJson(GenerateInstance(spec)) != InstanceJson(GenerateInstance(other)));
  }
}

TEST_CASE("frozen draws") {
  std::mt19937_64 rng(1);
  std::vector<int64_t> got;
  for (int i = 0; i < 6; ++i) got.push_back(DrawInRange(rng, 1, 100));
  CHECK(got == std::vector<int64_t>{29, 63, 31, 47, 85, 10});

  GeneratorSpec spec;
  spec.n = 5;
  spec.groups = 2;
  spec.seed = 7;
  CHECK(InstanceJson(GenerateInstance(spec)).dump() ==
        R"({"groups":[{"id":1,"k":1},{"id":2,"k":1}],"items":[)"
        R"({"group":1,"id":4,"size":"41/50"},{"group":1,"id":1,"size":"79/100"},)"
        R"({"group":2,"id":5,"size":"47/100"},{"group":1,"id":2,"size":"11/50"},)"
        R"({"group":1,"id":3,"size":"1/10"}]})");
}

TEST_CASE("empty and invalid specs") {
  GeneratorSpec spec;
  spec.n = 0;
  CHECK(GenerateInstance(spec).empty());
  spec.k_min = 3;
  spec.k_max = 2;
  CHECK_THROWS_AS(GenerateInstance(spec), InvalidInput);
  CHECK_THROWS_AS(ParseDistribution("gaussian"), InvalidInput);
  CHECK(ParseDistribution("heavy-dust") == SizeDistribution::kHeavyDust);
}

TEST_CASE("heavy-dust bands") {
  GeneratorSpec spec;
  spec.n = 400;
  spec.distribution = SizeDistribution::kHeavyDust;
  spec.heavy_percent = 30;
  spec.seed = 9;
  Instance inst = GenerateInstance(spec);
  const Rational eps2 = Q("1/121");
  int heavy = 0;
  for (const Item& it : inst.items()) {
    CHECK(it.size > 0);
    CHECK(it.size <= 1);
    heavy += it.size >= eps2;
  }
  CHECK(heavy > 80);
  CHECK(heavy < 160);
}

TEST_CASE("small and clustered ranges") {
  GeneratorSpec spec;
  spec.n = 200;
  spec.distribution = SizeDistribution::kSmall;
  spec.band = Q("1/10");
  Instance small = GenerateInstance(spec);
  for (const Item& it : small.items()) CHECK(it.size <= Q("1/10"));
  spec.distribution = SizeDistribution::kClustered;
  spec.t = 3;
  spec.spread = 10;
  Instance clustered = GenerateInstance(spec);
  for (const Item& it : clustered.items()) {
    CHECK(it.size >= Q("1/3") - Q("10/300"));
    CHECK(it.size <= Q("1/3") + Q("10/300"));
  }
  spec.k_min = 2;
  spec.k_max = 4;
  Instance capped = GenerateInstance(spec);
  for (const Group& g : capped.groups()) {
    CHECK(g.k >= 2);
    CHECK(g.k <= 4);
  }
}

}  // namespace
}  // namespace bpp
