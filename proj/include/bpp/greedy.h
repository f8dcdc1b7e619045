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

// Bin-by-bin packer for instances whose items are all at most delta. Each bin
// starts from the items that groups close to the cardinality bound must shed,
// is filled with unsaturated groups, and is improved by same-group swaps.

#ifndef BPP_GREEDY_H_
#define BPP_GREEDY_H_

#include <vector>

#include "bpp/core.h"

namespace bpp {

struct BoundingContext {
  Rational delta;
  Rational promise;                  // max{(1+2delta) s(I) + 2, V(I)}
  std::vector<int> bounding_groups;  // ceil(|G|/k(G)) > promise - 1
};

BoundingContext MakeBoundingContext(const Instance& inst, const Rational& delta);

// For each bounding group, its psi smallest items, psi minimal with
// ceil((|G| - psi) / k(G)) <= promise - 1.
std::vector<int> BoundingSubset(const Instance& inst, const BoundingContext& ctx);

// (1 + 2 delta) max{s(I), V(I)} + 2.
Rational GreedyBound(const Instance& inst, const Rational& delta);

struct GreedyStats {
  int fallbacks = 0;  // bins forced as a singleton; expected to stay 0
};

// Requires delta in (0, 1/2) and s <= delta for every item (InvalidInput
// otherwise). Asserts the bin-count bound.
Packing Greedy(const Instance& inst, const Rational& delta,
               GreedyStats* stats = nullptr);

}  // namespace bpp

#endif  // BPP_GREEDY_H_
