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

#include "bpp/partition_pack.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "bpp/greedy.h"

namespace bpp {
namespace {

void Fail(const std::string& stage, const std::string& what) {
  throw ContractViolation(stage, what);
}

// ln(eps^-22 Q^2).
long double CategoryCapLog(const ConstantSet& k) {
  return 22.0L * std::log(1.0L / ToDouble(k.epsilon)) + 2.0L * k.Q_log;
}

bool Kuhn(int u, const std::vector<std::vector<int>>& adj, std::vector<int>& match_right,
          std::vector<char>& seen) {
  // A free neighbour first, so earlier vertices keep their copies.
  for (int v : adj[u]) {
    if (match_right[v] < 0) {
      seen[v] = 1;
      match_right[v] = u;
      return true;
    }
  }
  for (int v : adj[u]) {
    if (seen[v]) continue;
    seen[v] = 1;
    if (match_right[v] < 0 || Kuhn(match_right[v], adj, match_right, seen)) {
      match_right[v] = u;
      return true;
    }
  }
  return false;
}

}  // namespace

Prototype Integralize(const Prototype& z) {
  Prototype out;
  for (const auto& [c, v] : z) out[c] = Rational(Ceil(v));
  if (Norm(out) > Norm(z) + static_cast<long>(z.size())) {
    Fail("partition", "integralization grew by more than |supp|");
  }
  return out;
}

AssignmentGraph BuildAssignmentGraph(const Instance& inst, const Prototype& z_star,
                                     const AssignmentPoint& gamma) {
  AssignmentGraph g;
  std::map<int, std::vector<int>> by_slot;  // slot -> items assigned integrally
  for (const auto& [key, v] : gamma) {
    if (key.second.is_slot && v == 1) by_slot[key.second.slot].push_back(key.first);
  }
  for (auto& [j, items] : by_slot) {
    g.left.insert(g.left.end(), items.begin(), items.end());
  }
  std::sort(g.left.begin(), g.left.end());
  std::map<int, int> left_index;
  for (size_t u = 0; u < g.left.size(); ++u) left_index[g.left[u]] = static_cast<int>(u);
  g.adj.resize(g.left.size());

  // Greedy cover over (C, copy) pairs: repeatedly take the configuration whose
  // next copy serves the largest total slot size still in demand. Adjacency
  // lists follow this sequence so the matching fills few copies; the edge set
  // itself is unchanged.
  std::map<int, int64_t> demand;
  for (const auto& [j, items] : by_slot) demand[j] = static_cast<int64_t>(items.size());
  std::map<std::pair<Configuration, int>, int64_t> rank;
  std::map<Configuration, int> used;
  int64_t next_rank = 0;
  while (true) {
    const Configuration* best = nullptr;
    Rational best_score = 0;
    for (const auto& [c, v] : z_star) {
      if (Ceil(v) <= used[c]) continue;
      Rational score = 0;
      for (int j : c.items) {
        auto it = demand.find(j);
        if (it != demand.end() && it->second > 0) score += inst.size(j);
      }
      if (score > best_score) {
        best_score = score;
        best = &c;
      }
    }
    if (best == nullptr) break;
    const int copy = ++used[*best];
    rank[{*best, copy}] = next_rank++;
    for (int j : best->items) {
      auto it = demand.find(j);
      if (it != demand.end() && it->second > 0) --it->second;
    }
  }

  std::vector<std::pair<int64_t, int64_t>> right_rank;  // (rank, creation index)
  for (const auto& [c, v] : z_star) {
    for (int j : c.items) {
      auto it = by_slot.find(j);
      if (it == by_slot.end()) continue;
      BigInt copies = Ceil(v);
      BigInt need(static_cast<long>(it->second.size()));
      int m = static_cast<int>((copies < need ? copies : need).get_si());
      for (int k = 1; k <= m; ++k) {
        int r = static_cast<int>(g.right.size());
        g.right.push_back(SlotCopy{c, j, k});
        auto rk = rank.find({c, k});
        right_rank.emplace_back(rk == rank.end() ? next_rank : rk->second, r);
        for (int item : it->second) g.adj[left_index[item]].push_back(r);
      }
    }
  }
  for (auto& a : g.adj) {
    std::stable_sort(a.begin(), a.end(),
                     [&](int x, int y) { return right_rank[x] < right_rank[y]; });
  }
  return g;
}

std::vector<int> MaximumMatching(const AssignmentGraph& g) {
  std::vector<int> match_right(g.right.size(), -1);
  for (size_t u = 0; u < g.left.size(); ++u) {
    std::vector<char> seen(g.right.size(), 0);
    Kuhn(static_cast<int>(u), g.adj, match_right, seen);
  }
  std::vector<int> match(g.left.size(), -1);
  for (size_t v = 0; v < g.right.size(); ++v) {
    if (match_right[v] >= 0) match[match_right[v]] = static_cast<int>(v);
  }
  return match;
}

std::vector<Configuration> MaterializedBins(const NicePartition& np) {
  std::vector<Configuration> out;
  for (const Configuration& c : np.categories) {
    const BinFamily& f = np.families.at(c);
    out.insert(out.end(), f.prefix.begin(), f.prefix.end());
    if (f.tail) out.push_back(*f.tail);
  }
  return out;
}

bool AllowedIn(const Instance& inst, const Configuration& a, const Configuration& c) {
  if (a.size() > c.size()) return false;
  std::vector<std::vector<int>> adj(a.size());
  for (int u = 0; u < a.size(); ++u) {
    int l = a.items[u];
    for (int v = 0; v < c.size(); ++v) {
      int j = c.items[v];
      if (inst.group_of(l) == inst.group_of(j) && inst.size(l) <= inst.size(j)) {
        adj[u].push_back(v);
      }
    }
  }
  std::vector<int> match_right(c.size(), -1);
  for (int u = 0; u < a.size(); ++u) {
    std::vector<char> seen(c.size(), 0);
    if (!Kuhn(u, adj, match_right, seen)) return false;
  }
  return true;
}

NicePartition Partition(const Instance& inst, const Prototype& z,
                        const ConstantSet& k, PartitionStats* stats) {
  const Rational& eps = k.epsilon;
  if (!z.empty() && std::log(static_cast<long double>(z.size())) > k.SupportCapLog()) {
    Fail("partition", "support of z exceeds Q(eps)");
  }
  for (const auto& [c, v] : z) {
    if (!IsConfiguration(inst, c)) Fail("partition", ToString(c) + " is not a configuration");
    if (!k.config_size_cap.Admits(c.size())) {
      Fail("partition", ToString(c) + " exceeds eps^-10 items");
    }
  }
  NicePartition np;
  np.size = 0;
  if (inst.empty()) return np;

  Prototype z_star = Integralize(z);
  PolytopeSpec spec = BuildPolytope(inst, z_star, eps, true);
  if (stats) {
    stats->z_norm = Norm(z);
    stats->z_star_norm = Norm(z_star);
    LinearProgram lp = ToLinearProgram(spec, true);
    stats->vertex_vars = lp.num_vars;
    stats->vertex_rows = static_cast<int>(lp.constraints.size());
  }
  AssignmentPoint gamma = VertexWithTightCover(spec);
  std::vector<std::string> bad = CheckPoint(spec, gamma, true);
  if (!bad.empty()) Fail("partition", "vertex violates " + bad.front());

  np.fractional = FractionalItems(gamma);
  np.support = static_cast<int>(z_star.size());
  int kmax = 1;
  for (const auto& [c, v] : z_star) kmax = std::max(kmax, c.size());
  np.max_config_size = kmax;
  {
    BigInt cap = 8 * BigInt(kmax) * kmax * np.support * np.support;
    if (BigInt(static_cast<long>(np.fractional.size())) > cap) {
      Fail("partition", "fractional items exceed 8k^2|supp|^2");
    }
  }

  AssignmentGraph graph = BuildAssignmentGraph(inst, z_star, gamma);
  std::vector<int> match = MaximumMatching(graph);
  for (int m : match) np.matched += m >= 0;
  if (np.matched != static_cast<int>(graph.left.size())) {
    Fail("partition", "matching covers " + std::to_string(np.matched) + " of " +
                          std::to_string(graph.left.size()) + " items");
  }

  std::map<Configuration, std::map<int, std::vector<int>>> bins;
  for (size_t u = 0; u < match.size(); ++u) {
    const SlotCopy& sc = graph.right[match[u]];
    bins[sc.config][sc.copy].push_back(graph.left[u]);
  }
  std::set<Configuration> categories;
  for (const auto& [c, v] : z_star) {
    categories.insert(c);
    BinFamily& fam = np.families[c];
    fam.count = Ceil(v);
    auto it = bins.find(c);
    if (it != bins.end()) {
      int last = it->second.rbegin()->first;
      fam.prefix.resize(last);
      for (auto& [copy, items] : it->second) {
        std::sort(items.begin(), items.end());
        fam.prefix[copy - 1] = Configuration(items);
      }
    }
  }
  for (int l : np.fractional) {
    Configuration single({l});
    categories.insert(single);
    BinFamily& fam = np.families[single];
    fam.count += 1;
    fam.tail = single;
  }
  np.categories.assign(categories.begin(), categories.end());
  for (const auto& [key, v] : gamma) {
    if (!key.second.is_slot && v == 1) np.completions[key.second.config].push_back(key.first);
  }
  for (auto& [c, d] : np.completions) std::sort(d.begin(), d.end());
  for (const auto& [c, fam] : np.families) np.size += fam.count;

  if (!LeqExp(Rational(np.size) - Norm(z), CategoryCapLog(k))) {
    Fail("partition", "partition size exceeds ||z|| + eps^-22 Q^2");
  }
  std::vector<std::string> errors = CheckNicePartition(inst, np, k);
  if (!errors.empty()) Fail("partition", errors.front());
  return np;
}

std::vector<std::string> CheckNicePartition(const Instance& inst,
                                            const NicePartition& np,
                                            const ConstantSet& k) {
  std::vector<std::string> errors;
  const Rational& eps = k.epsilon;
  if (!np.categories.empty() &&
      std::log(static_cast<long double>(np.categories.size())) > CategoryCapLog(k)) {
    errors.push_back("too many categories");
  }
  std::set<Configuration> cats(np.categories.begin(), np.categories.end());
  if (cats.size() != np.categories.size()) errors.push_back("duplicate category");
  if (np.families.size() != cats.size()) errors.push_back("families do not match categories");
  for (const auto& [c, fam] : np.families) {
    if (!cats.count(c)) errors.push_back("family of " + ToString(c) + " has no category");
  }
  for (const auto& [c, d] : np.completions) {
    if (!cats.count(c)) errors.push_back("completion of " + ToString(c) + " has no category");
  }
  std::vector<int> seen(inst.n() + 1, 0);
  BigInt total = 0;
  for (const auto& [c, fam] : np.families) {
    total += fam.count;
    BigInt used(static_cast<long>(fam.prefix.size()) + (fam.tail ? 1 : 0));
    if (used > fam.count) errors.push_back("family of " + ToString(c) + " overflows its count");
    auto check_bin = [&](const Configuration& a) {
      for (int id : a.items) ++seen[id];
      if (!IsConfiguration(inst, a)) {
        errors.push_back("bin " + ToString(a) + " is not a configuration");
      } else if (!AllowedIn(inst, a, c)) {
        errors.push_back("bin " + ToString(a) + " is not allowed in " + ToString(c));
      }
    };
    for (const Configuration& a : fam.prefix) check_bin(a);
    if (fam.tail) check_bin(*fam.tail);

    auto dit = np.completions.find(c);
    if (dit == np.completions.end()) continue;
    const std::vector<int>& d = dit->second;
    for (int id : d) ++seen[id];
    const Rational thr = FitConfigThreshold(inst, c, eps);
    for (int id : d) {
      if (inst.size(id) > thr) {
        errors.push_back("item " + std::to_string(id) + " does not fit with " + ToString(c));
      }
    }
    if (SizeOf(inst, d) > (1 - SizeOf(inst, c)) * Rational(fam.count)) {
      errors.push_back("completion of " + ToString(c) + " exceeds its capacity");
    }
    std::map<int, int64_t> dg, cg;
    for (int id : d) ++dg[inst.group_of(id)];
    for (int id : c.items) ++cg[inst.group_of(id)];
    for (const auto& [g, m] : dg) {
      BigInt cap = fam.count * BigInt(static_cast<long>(inst.group(g).k - cg[g]));
      if (BigInt(static_cast<long>(m)) > cap) {
        errors.push_back("completion of " + ToString(c) + " exceeds the cap of group " +
                         std::to_string(inst.group(g).id));
      }
    }
  }
  if (total != np.size) errors.push_back("size does not equal the total family count");
  for (int id = 1; id <= inst.n(); ++id) {
    if (seen[id] != 1) {
      errors.push_back("item " + std::to_string(id) + " appears " +
                       std::to_string(seen[id]) + " times");
    }
  }
  return errors;
}

SubInstance ResidualInstance(const Instance& inst, const Configuration& c,
                             const std::vector<int>& d) {
  const Rational sc = SizeOf(inst, c);
  if (!d.empty() && sc >= 1) Fail("pack", "nonempty completion of a full template");
  std::map<int, int64_t> in_c;
  for (int id : c.items) ++in_c[inst.group_of(id)];
  for (int id : d) {
    int g = inst.group_of(id);
    if (inst.group(g).k - in_c[g] < 1) {
      Fail("pack", "completion item " + std::to_string(id) + " has no residual cap");
    }
  }
  const Rational room = 1 - sc;
  return Restrict(
      inst, d, [&](int id) { return inst.size(id) / room; },
      [&](int g) { return inst.group(g).k - in_c[g]; });
}

Packing Pack(const Instance& inst, const NicePartition& np, const ConstantSet& k,
             PackStats* stats) {
  const Rational& eps = k.epsilon;
  Packing out;
  auto emit = [&](std::vector<int> items) {
    if (items.empty()) return;
    std::sort(items.begin(), items.end());
    out.bins.push_back(Configuration(std::move(items)));
  };
  for (const Configuration& c : np.categories) {
    const BinFamily& fam = np.families.at(c);
    std::vector<Configuration> extra;
    auto dit = np.completions.find(c);
    if (dit != np.completions.end() && !dit->second.empty()) {
      SubInstance sub = ResidualInstance(inst, c, dit->second);
      Packing g = Greedy(sub.inst, eps);
      for (const Configuration& b : g.bins) {
        std::vector<int> ids;
        for (int id : b.items) ids.push_back(sub.parent[id - 1]);
        extra.push_back(Configuration(ids));
      }
      if (stats) ++stats->categories_completed;
    }
    const BigInt r(static_cast<long>(extra.size()));
    const BigInt positions = r > fam.count ? r : fam.count;
    if (Rational(positions) > (1 + 2 * eps) * Rational(fam.count) + 2) {
      Fail("pack", "category " + ToString(c) + " exceeds (1+2eps)|B_C|+2 bins");
    }
    if (stats) stats->positions.emplace_back(fam.count, positions);
    if (stats && r > fam.count) stats->extra_bins += static_cast<int>(BigInt(r - fam.count).get_si());

    const size_t p = fam.prefix.size();
    // Positions 1..max(p, r): prefix bins merged with Greedy bins.
    for (size_t i = 0; i < std::max(p, extra.size()); ++i) {
      std::vector<int> items;
      if (i < p) items = fam.prefix[i].items;
      if (i < extra.size()) {
        items.insert(items.end(), extra[i].items.begin(), extra[i].items.end());
        if (fam.tail && BigInt(static_cast<long>(i + 1)) == fam.count) {
          items.insert(items.end(), fam.tail->items.begin(), fam.tail->items.end());
        }
      }
      emit(std::move(items));
    }
    if (fam.tail && fam.count > BigInt(static_cast<long>(extra.size()))) {
      emit(fam.tail->items);
    }
  }
  std::vector<std::string> errors = ValidatePacking(inst, out, true);
  if (!errors.empty()) Fail("pack", errors.front());
  return out;
}

}  // namespace bpp
