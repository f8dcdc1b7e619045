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
#include <string>

#include "bpp/io.h"
#include "bpp/oracle.h"
#include "doctest.h"
#include "helpers.h"

namespace bpp {
namespace {

using test::C;
using test::Q;

std::string ErrorOf(const std::string& text) {
  try {
    ParseInstance(text, "in.json");
  } catch (const InvalidInput& e) {
    return e.what();
  }
  return "";
}

TEST_CASE("well-formed instance") {
  Instance inst = ParseInstance(R"({
  "items": [{"id": 10, "size": "1/3", "group": 7},
            {"id": 11, "size": "0.25", "group": 7},
            {"id": 12, "size": 1, "group": 8}],
  "groups": [{"id": 7, "k": 2}, {"id": 8, "k": 1}]
})");
  REQUIRE(inst.n() == 3);
  CHECK(inst.size(1) == 1);
  CHECK(inst.size(2) == Q("1/3"));
  CHECK(inst.size(3) == Q("1/4"));
  CHECK(inst.item(3).label == 11);
  CHECK(inst.k_of_item(2) == 2);
}

TEST_CASE("members lists") {
  Instance inst = ParseInstance(R"({"items": [{"id": 1, "size": "1/2"}, {"id": 2, "size": "1/2"}],
                                    "groups": [{"id": 3, "k": 1, "members": [1, 2]}]})");
  CHECK(inst.group_of(1) == inst.group_of(2));
  CHECK(inst.k_of_item(1) == 1);
}

TEST_CASE("errors carry a line") {
  std::string zero = ErrorOf("{\n\"items\": [\n{\"id\": 1, \"size\": \"0\"}\n],\n\"groups\": []\n}");
  CHECK(zero.find("in.json:3") != std::string::npos);
  std::string syntax = ErrorOf("{\n\"items\": [\n{\"id\": 1, \"size\": }\n]}");
  CHECK(syntax.find("in.json:3") != std::string::npos);
  CHECK_FALSE(ErrorOf(R"({"items": [{"id": 1, "size": 0.5}], "groups": []})").empty());
  CHECK_FALSE(ErrorOf(R"({"items": [{"id": 1, "size": "3/2"}], "groups": []})").empty());
  CHECK_FALSE(ErrorOf(R"({"items": [{"id": 1, "size": "1/2", "group": 9}], "groups": []})").empty());
  CHECK_FALSE(ErrorOf(R"([1, 2])").empty());
}

TEST_CASE("instance and packing round trip") {
  std::mt19937_64 rng(107);
  for (int round = 0; round < 30; ++round) {
    Instance inst = test::Random(rng, static_cast<int>(rng() % 20), 3, 3, 1, 97, 97);
    Instance back = ParseInstance(InstanceJson(inst).dump(2));
    REQUIRE(back.n() == inst.n());
    for (int id = 1; id <= inst.n(); ++id) {
      CHECK(back.size(id) == inst.size(id));
      CHECK(back.item(id).label == inst.item(id).label);
      CHECK(back.k_of_item(id) == inst.k_of_item(id));
      CHECK(back.group(back.group_of(id)).id == inst.group(inst.group_of(id)).id);
    }
    Packing p = FirstFitDecreasing(inst);
    CHECK(ParsePacking(inst, PackingJson(inst, p).dump()).bins == p.bins);
  }
}

TEST_CASE("packing parsing") {
  Instance inst = ParseInstance(R"({"items": [{"id": 5, "size": "1/2", "group": 1},
                                              {"id": 9, "size": "1/3", "group": 1}],
                                    "groups": [{"id": 1, "k": 2}]})");
  CHECK_THROWS_AS(ParseInstance(R"({"items": [{"id": 1, "size": "1/2"}], "groups": []})"),
                  InvalidInput);
  CHECK(ParsePacking(inst, R"({"bins": [[9, 5]]})").bins == std::vector<Configuration>{C({1, 2})});
  CHECK(ParsePacking(inst, R"({"bins": [[5]], "packing": [[5], [9]]})").num_bins() == 2);
  CHECK_THROWS_AS(ParsePacking(inst, R"({"bins": [[7]]})"), InvalidInput);
  CHECK_THROWS_AS(ParsePacking(inst, R"({"bins": [[5, 5]]})"), InvalidInput);
  CHECK_THROWS_AS(ParsePacking(inst, R"({"bins": 3})"), InvalidInput);
  CHECK_THROWS_AS(LoadInstance("/nonexistent/file.json"), InvalidInput);
}

}  // namespace
}  // namespace bpp
