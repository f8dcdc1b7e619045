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

// The assignment polytope of a prototype: items are assigned fractionally to
// slot types (items of support configurations) and to configuration types.
//
//   (fit)       gamma[l,t] exists only if l fits t
//   (capacity)  sum_l gamma[l,C] s(l)   <= (1 - s(C)) x_C
//   (matroid)   sum_{l in G} gamma[l,C] <= x_C (k(G) - |C n G|)
//   (slots)     sum_l gamma[l,j]        <= sum_{C containing j} x_C
//   (cover)     sum_t gamma[l,t]        >= 1

#ifndef BPP_POLYTOPE_H_
#define BPP_POLYTOPE_H_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "bpp/core.h"
#include "bpp/exact_lp.h"

namespace bpp {

struct TypeKey {
  bool is_slot = true;
  int slot = 0;          // item id when is_slot
  Configuration config;  // when !is_slot
  auto operator<=>(const TypeKey&) const = default;
  static TypeKey Slot(int id) { return TypeKey{true, id, {}}; }
  static TypeKey Config(Configuration c) { return TypeKey{false, 0, std::move(c)}; }
};

std::string ToString(const TypeKey& t);

// (item, type) -> value in (0, 1].
using AssignmentPoint = std::map<std::pair<int, TypeKey>, Rational>;

struct PolytopeSpec {
  const Instance* inst = nullptr;
  Prototype x;
  Rational eps;
  std::vector<TypeKey> types;
  std::vector<std::pair<int, int>> vars;  // (item id, index into types)
  bool cross_slots = true;
};

// With cross_slots = false, an item may use only its own slot; that is the
// restricted polytope used to certify eviction.
PolytopeSpec BuildPolytope(const Instance& inst, const Prototype& x,
                           const Rational& eps, bool cross_slots = true);

// Cover rows as equalities. Rows that cannot bind at any point with
// coordinates in [0,1] are dropped when drop_redundant is set; the feasible
// region is unchanged.
LinearProgram ToLinearProgram(const PolytopeSpec& spec, bool drop_redundant);

bool PolytopeNonempty(const PolytopeSpec& spec);

// A vertex of the polytope with every cover row tight. The objective charges
// nothing for a configuration type, 1 for an item's own slot and 2 for
// another slot. Throws ContractViolation if empty.
AssignmentPoint VertexWithTightCover(const PolytopeSpec& spec);

std::vector<int> FractionalItems(const AssignmentPoint& point);

// Exact re-check of all rows (cover as equality when tight_cover).
std::vector<std::string> CheckPoint(const PolytopeSpec& spec,
                                    const AssignmentPoint& point,
                                    bool tight_cover);

// One inequality per line.
std::string DumpInequalities(const PolytopeSpec& spec);

}  // namespace bpp

#endif  // BPP_POLYTOPE_H_
