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

// Eviction: every support configuration keeps its large items plus the
// shortest prefix of small items after which the rest fit as a completion.

#ifndef BPP_EVICT_H_
#define BPP_EVICT_H_

#include <string>
#include <vector>

#include "bpp/core.h"

namespace bpp {

struct Relaxation {
  Configuration source;
  Configuration R;   // (C n L) + U
  Configuration U;   // kept prefix of small items
  Configuration Lc;  // items of U with s >= (1 - s(R)) / eps
  Prototype vector;
  bool capped = false;  // |U| reached alpha
};

// Items of size >= eps^2.
bool IsLarge(const Instance& inst, int id, const Rational& eps);

Relaxation ComputeRelaxation(const Instance& inst, const Configuration& c,
                             const ConstantSet& k);

struct EvictStats {
  int capped = 0;
  Rational max_frequency;
  bool restricted_polytope_nonempty = false;
  std::vector<std::string> soft_failures;  // reported, not fatal
};

// x must cover every item exactly once. Asserts the eviction contract:
// norm growth, per-item frequency <= 2, s(C \ L) <= eps, |C| <= eps^-10,
// and feasibility of the restricted polytope (own slots only) when
// check_polytope is set.
Prototype Evict(const Instance& inst, const Prototype& x, const ConstantSet& k,
                bool check_polytope = true, EvictStats* stats = nullptr);

}  // namespace bpp

#endif  // BPP_EVICT_H_
