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

#include "bpp/evict.h"

#include <map>

#include "bpp/config_lp.h"
#include "bpp/polytope.h"

namespace bpp {

bool IsLarge(const Instance& inst, int id, const Rational& eps) {
  return inst.size(id) >= eps * eps;
}

Relaxation ComputeRelaxation(const Instance& inst, const Configuration& c,
                             const ConstantSet& k) {
  const Rational& eps = k.epsilon;
  const Rational eps2 = eps * eps;
  Relaxation rel;
  rel.source = c;
  std::vector<int> large, small;
  for (int id : c.items) (IsLarge(inst, id, eps) ? large : small).push_back(id);

  // Least h such that every small item after the first h fits the kept set;
  // items are in non-increasing size, so testing the next one suffices.
  Rational kept = SizeOf(inst, large);
  size_t h = 0;
  while (h < small.size()) {
    Rational thr = eps * (1 - kept);
    if (eps2 < thr) thr = eps2;
    if (inst.size(small[h]) <= thr) break;
    kept += inst.size(small[h]);
    ++h;
  }
  if (!k.alpha.unbounded && static_cast<int64_t>(h) > k.alpha.value) {
    h = static_cast<size_t>(k.alpha.value);
  }
  std::vector<int> u(small.begin(), small.begin() + h);
  std::vector<int> r = large;
  r.insert(r.end(), u.begin(), u.end());
  rel.U = Configuration(u);
  rel.R = Configuration(r);
  Rational slack_r = (1 - SizeOf(inst, rel.R)) / eps;
  std::vector<int> lc;
  for (int id : rel.U.items) {
    if (inst.size(id) >= slack_r) lc.push_back(id);
  }
  rel.Lc = Configuration(lc);
  rel.capped = !k.alpha.unbounded &&
               static_cast<int64_t>(rel.U.size()) == k.alpha.value;
  if (!rel.capped) {
    rel.vector[rel.R] = 1;
    return rel;
  }
  if (rel.Lc.size() < 2) {
    throw ContractViolation("evict", "capped prefix of " + ToString(c) +
                                         " has fewer than two large-prefix items");
  }
  if (!k.overrides.alpha && Rational(rel.Lc.size()) < Pow(eps, -4)) {
    throw ContractViolation("evict", "large-prefix set of " + ToString(c) +
                                         " is smaller than eps^-4");
  }
  Rational w(1, rel.Lc.size() - 1);
  for (int id : rel.Lc.items) {
    std::vector<int> rest;
    for (int j : rel.R.items) {
      if (j != id) rest.push_back(j);
    }
    AddTo(rel.vector, Configuration(rest), w);
  }
  return rel;
}

namespace {

void Require(bool ok, bool strict, const std::string& what, EvictStats* stats) {
  if (ok) return;
  if (strict) throw ContractViolation("evict", what);
  if (stats) stats->soft_failures.push_back(what);
}

}  // namespace

Prototype Evict(const Instance& inst, const Prototype& x, const ConstantSet& k,
                bool check_polytope, EvictStats* stats) {
  const Rational& eps = k.epsilon;
  std::vector<Rational> cov = Coverage(inst, x);
  for (int id = 1; id <= inst.n(); ++id) {
    if (cov[id - 1] != 1) {
      throw ContractViolation("evict", "input does not cover item " +
                                           std::to_string(id) + " exactly once");
    }
  }
  // Bounds that rest on alpha = eps^-5 are only reported once alpha is
  // overridden.
  const bool strict = !k.overrides.alpha;
  const Rational relax_cap = 1 + 2 * Pow(eps, 4);
  Prototype y;
  int capped = 0;
  for (const auto& [c, v] : x) {
    Relaxation rel = ComputeRelaxation(inst, c, k);
    capped += rel.capped;
    Require(Norm(rel.vector) <= relax_cap, strict,
            "relaxation norm of " + ToString(c) + " exceeds 1+2eps^4", stats);
    std::vector<int> evicted;
    for (int id : c.items) {
      if (!rel.R.Contains(id)) evicted.push_back(id);
    }
    Rational evicted_size = SizeOf(inst, evicted);
    for (const auto& [cp, w] : rel.vector) {
      Rational thr = FitConfigThreshold(inst, cp, eps);
      bool fits = true;
      for (int id : evicted) fits = fits && inst.size(id) <= thr;
      Require(fits, strict, "evicted items of " + ToString(c) + " do not fit " +
                                ToString(cp), stats);
      Require(evicted_size <= 1 - SizeOf(inst, cp), strict,
              "evicted size of " + ToString(c) + " exceeds residual of " +
                  ToString(cp), stats);
      std::map<int, int64_t> ev_count, cp_count;
      for (int id : evicted) ++ev_count[inst.group_of(id)];
      for (int id : cp.items) ++cp_count[inst.group_of(id)];
      for (const auto& [g, ev] : ev_count) {
        Require(ev <= inst.group(g).k - cp_count[g], strict,
                "evicted items of " + ToString(c) + " exceed the cap of group " +
                    std::to_string(inst.group(g).id), stats);
      }
      AddTo(y, cp, v * w);
    }
  }

  Require(Norm(y) <= (1 + eps) * Norm(x), strict, "norm grew beyond (1+eps)",
          stats);
  std::vector<Rational> freq = Coverage(inst, y);
  Rational fmax = 0;
  for (const Rational& f : freq) {
    if (f > fmax) fmax = f;
  }
  Require(fmax <= 2, strict, "an item has frequency above 2", stats);
  for (const auto& [c, v] : y) {
    Rational small = 0;
    for (int id : c.items) {
      if (!IsLarge(inst, id, eps)) small += inst.size(id);
    }
    Require(small <= eps, true, "small part of " + ToString(c) + " exceeds eps",
            stats);
    Require(k.config_size_cap.Admits(c.size()), true,
            "configuration " + ToString(c) + " exceeds eps^-10 items", stats);
  }
  bool feasible = true;
  if (check_polytope) {
    feasible = PolytopeNonempty(BuildPolytope(inst, y, eps, false));
    Require(feasible, strict, "restricted polytope of the evicted prototype is empty",
            stats);
  }
  if (stats) {
    stats->capped = capped;
    stats->max_frequency = fmax;
    stats->restricted_polytope_nonempty = feasible;
  }
  return y;
}

}  // namespace bpp
