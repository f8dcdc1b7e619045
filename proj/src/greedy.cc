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

#include "bpp/greedy.h"

#include <algorithm>

namespace bpp {
namespace {

// Items still to be packed, by group, ascending id.
struct Remaining {
  const Instance* inst;
  std::vector<std::vector<int>> by_group;
  int count = 0;
  Rational size;

  explicit Remaining(const Instance& in) : inst(&in), by_group(in.num_groups()) {
    for (int g = 0; g < in.num_groups(); ++g) by_group[g] = in.group(g).members;
    count = in.n();
    size = in.TotalSize();
  }

  int64_t V() const {
    int64_t v = 0;
    for (int g = 0; g < inst->num_groups(); ++g) {
      int64_t k = inst->group(g).k;
      int64_t m = static_cast<int64_t>(by_group[g].size());
      v = std::max(v, (m + k - 1) / k);
    }
    return v;
  }

  bool IsConfiguration() const {
    if (size > 1) return false;
    for (int g = 0; g < inst->num_groups(); ++g) {
      if (static_cast<int64_t>(by_group[g].size()) > inst->group(g).k) return false;
    }
    return true;
  }

  void Remove(const std::vector<int>& bin) {
    for (int id : bin) {
      auto& v = by_group[inst->group_of(id)];
      v.erase(std::lower_bound(v.begin(), v.end(), id));
      size -= inst->size(id);
      --count;
    }
  }
};

BoundingContext Context(const Remaining& rem, const Rational& delta) {
  BoundingContext ctx;
  ctx.delta = delta;
  Rational a = (1 + 2 * delta) * rem.size + 2;
  Rational v(rem.V());
  ctx.promise = a > v ? a : v;
  const Rational lim = ctx.promise - 1;
  for (int g = 0; g < rem.inst->num_groups(); ++g) {
    int64_t k = rem.inst->group(g).k;
    int64_t m = static_cast<int64_t>(rem.by_group[g].size());
    if (m > 0 && Rational((m + k - 1) / k) > lim) ctx.bounding_groups.push_back(g);
  }
  return ctx;
}

std::vector<int> Subset(const Remaining& rem, const BoundingContext& ctx) {
  std::vector<int> out;
  // ceil(x / k) <= t iff x <= k t, with t = floor(promise - 1) >= 1.
  const int64_t t = Floor(ctx.promise - 1).get_si();
  for (int g : ctx.bounding_groups) {
    const auto& members = rem.by_group[g];
    int64_t psi = static_cast<int64_t>(members.size()) - rem.inst->group(g).k * t;
    if (psi <= 0) continue;
    // Largest ids are the smallest items.
    out.insert(out.end(), members.end() - psi, members.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

BoundingContext MakeBoundingContext(const Instance& inst, const Rational& delta) {
  return Context(Remaining(inst), delta);
}

std::vector<int> BoundingSubset(const Instance& inst, const BoundingContext& ctx) {
  return Subset(Remaining(inst), ctx);
}

Rational GreedyBound(const Instance& inst, const Rational& delta) {
  Rational s = inst.TotalSize();
  Rational v(CardinalityBound(inst));
  return (1 + 2 * delta) * (s > v ? s : v) + 2;
}

Packing Greedy(const Instance& inst, const Rational& delta, GreedyStats* stats) {
  if (sgn(delta) <= 0 || delta >= Rational(1, 2)) {
    throw InvalidInput("greedy: delta must lie in (0, 1/2)");
  }
  for (const Item& it : inst.items()) {
    if (it.size > delta) {
      throw InvalidInput("greedy: item " + std::to_string(it.id) +
                         " is larger than delta");
    }
  }
  Packing out;
  Remaining rem(inst);
  const Rational full = 1 - delta;
  std::vector<char> in_a(inst.n() + 1, 0);
  while (rem.count > 0) {
    if (rem.IsConfiguration()) {
      std::vector<int> bin;
      for (const auto& v : rem.by_group) bin.insert(bin.end(), v.begin(), v.end());
      std::sort(bin.begin(), bin.end());
      out.bins.push_back(Configuration(bin));
      break;
    }
    BoundingContext ctx = Context(rem, delta);
    std::vector<int> a = Subset(rem, ctx);
    std::vector<int64_t> cnt(inst.num_groups(), 0);
    Rational load = 0;
    for (int id : a) {
      in_a[id] = 1;
      ++cnt[inst.group_of(id)];
      load += inst.size(id);
    }
    // Fill: smallest id from a group that is not saturated.
    while (load <= full) {
      int pick = -1;
      for (int g = 0; g < inst.num_groups(); ++g) {
        if (cnt[g] >= inst.group(g).k) continue;
        for (int id : rem.by_group[g]) {
          if (in_a[id]) continue;
          if (pick < 0 || id < pick) pick = id;
          break;
        }
      }
      if (pick < 0) break;
      in_a[pick] = 1;
      ++cnt[inst.group_of(pick)];
      load += inst.size(pick);
      a.push_back(pick);
    }
    // Swap: smallest l in A with a strictly larger y outside A in its group;
    // y is the smallest such id, i.e. the largest such item.
    while (load <= full) {
      std::sort(a.begin(), a.end());
      int out_l = -1, in_y = -1;
      for (int l : a) {
        for (int y : rem.by_group[inst.group_of(l)]) {
          if (y >= l) break;
          if (!in_a[y] && inst.size(y) > inst.size(l)) {
            in_y = y;
            break;
          }
        }
        if (in_y >= 0) {
          out_l = l;
          break;
        }
      }
      if (out_l < 0) break;
      in_a[out_l] = 0;
      in_a[in_y] = 1;
      load += inst.size(in_y) - inst.size(out_l);
      *std::find(a.begin(), a.end(), out_l) = in_y;
    }
    if (a.empty()) {
      if (stats) ++stats->fallbacks;
      int largest = -1;
      for (const auto& v : rem.by_group) {
        if (!v.empty() && (largest < 0 || v.front() < largest)) largest = v.front();
      }
      a.push_back(largest);
    }
    std::sort(a.begin(), a.end());
    for (int id : a) in_a[id] = 0;
    rem.Remove(a);
    out.bins.push_back(Configuration(a));
  }
  if (Rational(out.num_bins()) > GreedyBound(inst, delta)) {
    throw ContractViolation("greedy", "bin count " + std::to_string(out.num_bins()) +
                                          " exceeds (1+2delta)max{s,V}+2");
  }
  return out;
}

}  // namespace bpp
