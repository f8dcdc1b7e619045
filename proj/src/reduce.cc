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

#include "bpp/reduce.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "bpp/greedy.h"

namespace bpp {

namespace {

void Fail(const std::string& what) { throw ContractViolation("reduce", what); }

int64_t MaxPivot(const Rational& eps) {
  BigInt m = Floor(1 / eps);
  return m.get_si() + 1;
}

}  // namespace

int MinimalPivot(const Instance& inst, const Rational& eps) {
  const int64_t last = MaxPivot(eps);
  int best = 2;
  Rational best_load = -1;
  Rational lo = Pow(eps, 3), hi = Pow(eps, 2);
  for (int64_t i = 2; i <= last; ++i) {
    Rational load = 0;
    for (const Item& it : inst.items()) {
      if (it.size >= lo && it.size < hi) load += it.size;
    }
    if (best_load < 0 || load < best_load) {
      best_load = load;
      best = static_cast<int>(i);
    }
    hi = lo;
    lo *= eps;
  }
  return best;
}

int CountMassiveGroups(const Instance& inst, const Rational& eps) {
  const Rational eps2 = eps * eps;
  int count = 0;
  for (const Group& g : inst.groups()) {
    bool massive = false;
    for (int id : g.members) massive = massive || inst.size(id) >= eps2;
    count += massive;
  }
  return count;
}

Reduction Reduce(const Instance& inst, const ConstantSet& k) {
  const Rational& eps = k.epsilon;
  ReductionMeta meta;
  meta.w = MinimalPivot(inst, eps);
  const Rational heavy_thr = Pow(eps, meta.w);
  const Rational medium_thr = heavy_thr * eps;
  std::vector<int> g_w(inst.num_groups(), 0);
  for (int id = 1; id <= inst.n(); ++id) {
    const Rational& s = inst.size(id);
    if (s >= heavy_thr) {
      meta.heavy.push_back(id);
    } else if (s >= medium_thr) {
      meta.medium.push_back(id);
    } else {
      meta.light.push_back(id);
    }
    if (s >= medium_thr) ++g_w[inst.group_of(id)];
  }

  std::vector<int> order(inst.num_groups());
  for (int g = 0; g < inst.num_groups(); ++g) order[g] = g;
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g_w[a] > g_w[b]; });
  meta.kappa = k.Kappa(meta.w, inst.num_groups());
  std::vector<bool> large(inst.num_groups(), false);
  for (int64_t i = 0; i < meta.kappa; ++i) {
    meta.large_groups.push_back(order[i]);
    large[order[i]] = true;
  }
  for (int g = 0; g < inst.num_groups(); ++g) {
    if (!large[g]) meta.small_groups.push_back(g);
  }

  int64_t max_id = 0;
  for (const Group& g : inst.groups()) max_id = std::max(max_id, g.id);
  meta.union_group_id = max_id + 1;

  RawInstance raw;
  for (int g = 0; g < inst.num_groups(); ++g) {
    RawGroup rg{inst.group(g).id, inst.group(g).k, {}};
    for (int id : inst.group(g).members) {
      const Rational& s = inst.size(id);
      if (!large[g] && s >= heavy_thr) {
        meta.gamma.push_back(id);
        continue;
      }
      if (!large[g] && s >= medium_thr) meta.omega.push_back(id);
      rg.members.push_back(id);
    }
    if (!rg.members.empty()) raw.groups.push_back(std::move(rg));
  }
  std::sort(meta.gamma.begin(), meta.gamma.end());
  std::sort(meta.omega.begin(), meta.omega.end());
  if (!meta.gamma.empty()) {
    RawGroup u{meta.union_group_id, static_cast<int64_t>(meta.gamma.size()) + 1, {}};
    for (int id : meta.gamma) u.members.push_back(id);
    raw.groups.push_back(std::move(u));
  }
  for (int id = 1; id <= inst.n(); ++id) {
    raw.items.push_back(RawItem{id, inst.size(id), std::nullopt});
  }

  // Items are already sorted, so the ids survive revalidation.
  Reduction red{MakeInstance(raw), std::move(meta)};
  const Instance& s = red.structured;
  for (int id = 1; id <= s.n(); ++id) {
    if (s.item(id).label != id) Fail("structured instance renumbered item " + std::to_string(id));
  }
  const int massive = CountMassiveGroups(s, eps);
  if (massive > 0 && std::log(static_cast<long double>(massive)) > k.K_log) {
    Fail("structured instance has more than K(eps) massive groups");
  }

  ReductionMeta& m = red.meta;
  m.beta = Saturate(Pow(eps, -(m.w + 2)));
  const int64_t gsz = static_cast<int64_t>(m.gamma.size());
  int64_t chunk = 1;
  if (!m.beta.unbounded) {
    chunk = Ceil(Rational(gsz) / m.beta.value).get_si();
    if (chunk < 1) chunk = 1;
  }
  for (int64_t i = 0; i < gsz; i += chunk) {
    int64_t end = std::min(gsz, i + chunk);
    m.shifting.emplace_back(m.gamma.begin() + i, m.gamma.begin() + end);
  }
  return red;
}

namespace {

// position of each gamma item in the shifting partition, -1 elsewhere.
std::vector<int> PartOf(const Instance& orig, const ReductionMeta& meta) {
  std::vector<int> part(orig.n() + 1, -1);
  for (size_t j = 0; j < meta.shifting.size(); ++j) {
    for (int id : meta.shifting[j]) part[id] = static_cast<int>(j);
  }
  return part;
}

}  // namespace

FillResult Fill(const Instance& orig, const ReductionMeta& meta, const Packing& a) {
  const int m = a.num_bins();
  const size_t q = meta.shifting.size();
  std::vector<int> part = PartOf(orig, meta);
  // a_count[i][j] = |A_i n P_j|
  std::vector<std::vector<int>> a_count(m, std::vector<int>(q, 0));
  for (int i = 0; i < m; ++i) {
    for (int id : a.bins[i].items) {
      if (part[id] >= 0) ++a_count[i][part[id]];
    }
  }
  FillResult res;
  res.B.assign(m, {});
  std::vector<std::vector<int>> b_count(m, std::vector<int>(q, 0));
  std::vector<std::map<int, int64_t>> b_group(m);
  std::set<int> r(meta.gamma.begin(), meta.gamma.end());
  // Both conditions only tighten as B grows, so one ordered pass finds every
  // admissible move.
  for (size_t j = 1; j < q; ++j) {
    for (int i = 0; i < m; ++i) {
      for (int id : meta.shifting[j]) {
        if (!r.count(id)) continue;
        if (b_count[i][j] >= a_count[i][j - 1]) break;
        const int g = orig.group_of(id);
        if (b_group[i][g] >= orig.group(g).k) continue;
        res.B[i].push_back(id);
        ++b_count[i][j];
        ++b_group[i][g];
        r.erase(id);
      }
    }
  }
  res.R.assign(r.begin(), r.end());
  for (auto& b : res.B) std::sort(b.begin(), b.end());
  return res;
}

std::vector<std::string> CheckFill(const Instance& orig, const ReductionMeta& meta,
                                   const Packing& a, const FillResult& fill) {
  std::vector<std::string> errors;
  const size_t q = meta.shifting.size();
  std::vector<int> part = PartOf(orig, meta);
  std::vector<int> seen;
  for (size_t i = 0; i < fill.B.size(); ++i) {
    std::vector<int> a_count(q, 0), b_count(q, 0);
    std::map<int, int64_t> per_group;
    for (int id : a.bins[i].items) {
      if (part[id] >= 0) ++a_count[part[id]];
    }
    for (int id : fill.B[i]) {
      if (id < 1 || id > orig.n() || part[id] < 0) {
        errors.push_back("B_" + std::to_string(i + 1) + " holds a non-gamma item");
        continue;
      }
      seen.push_back(id);
      ++b_count[part[id]];
      ++per_group[orig.group_of(id)];
    }
    if (q > 0 && b_count[0] != 0) {
      errors.push_back("B_" + std::to_string(i + 1) + " holds an item of P_1");
    }
    for (size_t j = 1; j < q; ++j) {
      if (b_count[j] > a_count[j - 1]) {
        errors.push_back("|B_" + std::to_string(i + 1) + " n P_" + std::to_string(j + 1) +
                         "| exceeds |A n P_" + std::to_string(j) + "|");
      }
    }
    for (const auto& [g, c] : per_group) {
      if (c > orig.group(g).k) {
        errors.push_back("B_" + std::to_string(i + 1) + " exceeds the cap of group " +
                         std::to_string(orig.group(g).id));
      }
    }
  }
  seen.insert(seen.end(), fill.R.begin(), fill.R.end());
  std::sort(seen.begin(), seen.end());
  if (seen != meta.gamma) errors.push_back("(B, R) does not partition gamma");
  return errors;
}

Packing Reconstruct(const Instance& orig, const ConstantSet& k,
                    const ReductionMeta& meta, const Packing& a,
                    ReconstructStats* stats) {
  const Rational& eps = k.epsilon;
  ReconstructStats local;
  ReconstructStats& st = stats ? *stats : local;
  st = ReconstructStats{};
  st.fill = Fill(orig, meta, a);
  std::vector<std::string> errors = CheckFill(orig, meta, a, st.fill);
  if (!errors.empty()) Fail("Fill: " + errors.front());

  std::vector<bool> drop(orig.n() + 1, false);
  for (int id : meta.gamma) drop[id] = true;
  for (int id : meta.omega) drop[id] = true;
  const Rational light_thr = Pow(eps, meta.w + 1);

  Packing out;
  for (int i = 0; i < a.num_bins(); ++i) {
    std::vector<int> u;
    for (int id : a.bins[i].items) {
      if (!drop[id]) u.push_back(id);
    }
    u.insert(u.end(), st.fill.B[i].begin(), st.fill.B[i].end());
    std::sort(u.begin(), u.end());
    std::map<int, std::vector<int>> by_group;
    for (int id : u) by_group[orig.group_of(id)].push_back(id);
    std::set<int> discard;
    for (auto& [g, ids] : by_group) {
      int64_t excess = static_cast<int64_t>(ids.size()) - orig.group(g).k;
      // ids ascend, so the smallest items come last.
      for (auto it = ids.rbegin(); excess > 0 && it != ids.rend(); ++it) {
        if (orig.size(*it) >= light_thr) continue;
        discard.insert(*it);
        --excess;
      }
      if (excess > 0) {
        Fail("bin " + std::to_string(i + 1) + " cannot meet the cap of group " +
             std::to_string(orig.group(g).id) + " by dropping light items");
      }
    }
    std::vector<int> kept;
    for (int id : u) {
      if (discard.count(id)) {
        st.discarded.push_back(id);
      } else {
        kept.push_back(id);
      }
    }
    if (!kept.empty()) out.bins.emplace_back(std::move(kept));
  }
  std::sort(st.discarded.begin(), st.discarded.end());
  st.shifted_bins = out.num_bins();
  for (int id : st.fill.R) out.bins.emplace_back(std::vector<int>{id});

  std::vector<int> e = meta.omega;
  e.insert(e.end(), st.discarded.begin(), st.discarded.end());
  std::sort(e.begin(), e.end());
  if (!e.empty()) {
    SubInstance sub = Restrict(orig, e);
    Packing g = Greedy(sub.inst, eps);
    st.greedy_bins = g.num_bins();
    for (const Configuration& c : g.bins) {
      std::vector<int> ids;
      for (int id : c.items) ids.push_back(sub.parent[id - 1]);
      out.bins.emplace_back(std::move(ids));
    }
  }
  errors = ValidatePacking(orig, out, true);
  if (!errors.empty()) Fail("reconstructed packing: " + errors.front());
  return out;
}

bool SmallGroupPremise(const Instance& orig, const ReductionMeta& meta,
                       const Rational& eps, int64_t opt) {
  const Rational bound = Pow(eps, 2 * meta.w + 4) * opt;
  const Rational medium_thr = Pow(eps, meta.w + 1);
  for (int g : meta.small_groups) {
    int64_t c = 0;
    for (int id : orig.group(g).members) c += orig.size(id) >= medium_thr;
    if (!(Rational(c) < bound)) return false;
  }
  return true;
}

std::vector<std::string> CheckOptBounds(const Instance& orig, const Rational& eps,
                                        const ReconstructStats& stats,
                                        int in_bins, int out_bins, int64_t opt) {
  std::vector<std::string> errors;
  const Rational e_opt = eps * opt;
  if (Rational(static_cast<long>(stats.fill.R.size())) > e_opt + 1) {
    errors.push_back("|R| exceeds eps OPT + 1");
  }
  if (SizeOf(orig, stats.discarded) > e_opt) errors.push_back("s(D) exceeds eps OPT");
  std::map<int, int64_t> per_group;
  for (int id : stats.discarded) ++per_group[orig.group_of(id)];
  for (const auto& [g, c] : per_group) {
    if (Rational(c) > e_opt) {
      errors.push_back("|D n G| exceeds eps OPT for group " +
                       std::to_string(orig.group(g).id));
    }
  }
  if (Rational(out_bins) > in_bins + 13 * e_opt + 1) {
    errors.push_back("reconstruction adds more than 13 eps OPT + 1 bins");
  }
  return errors;
}

}  // namespace bpp
