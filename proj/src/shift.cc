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

#include "bpp/shift.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "bpp/config_lp.h"
#include "bpp/evict.h"
#include "bpp/polytope.h"

namespace bpp {

Rational Frequency(const Prototype& y, const std::vector<int>& ids) {
  std::set<int> s(ids.begin(), ids.end());
  Rational f = 0;
  for (const auto& [c, v] : y) {
    for (int id : c.items) {
      if (s.count(id)) f += v;
    }
  }
  return f;
}

ImportantGroups FindImportantGroups(const Instance& inst, const Prototype& y,
                                    const ConstantSet& k) {
  const Rational& eps = k.epsilon;
  std::vector<Rational> freq = Coverage(inst, y);
  ImportantGroups out;
  std::vector<std::pair<Rational, int>> small_freq;
  for (int g = 0; g < inst.num_groups(); ++g) {
    Rational f = 0;
    bool massive = false;
    for (int id : inst.group(g).members) {
      if (IsLarge(inst, id, eps)) {
        massive = true;
      } else {
        f += freq[id - 1];
      }
    }
    if (massive) out.massive.push_back(g);
    small_freq.emplace_back(f, g);
  }
  // Groups are indexed by ascending id, so the index breaks ties.
  std::stable_sort(small_freq.begin(), small_freq.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  SatInt eta = k.Eta(inst.num_groups());
  for (const auto& [f, g] : small_freq) {
    if (!eta.Admits(static_cast<int64_t>(out.significant.size()) + 1)) break;
    out.significant.push_back(g);
  }
  std::sort(out.significant.begin(), out.significant.end());
  std::set_union(out.significant.begin(), out.significant.end(),
                 out.massive.begin(), out.massive.end(),
                 std::back_inserter(out.important));
  return out;
}

ClassFamily BuildClasses(const Instance& inst, const Prototype& y,
                         const ConstantSet& k) {
  ClassFamily q;
  q.threshold = k.ClassThreshold(Norm(y));
  q.groups = FindImportantGroups(inst, y, k);
  std::vector<Rational> freq = Coverage(inst, y);
  for (int g : q.groups.important) {
    std::vector<std::vector<int>>& classes = q.classes[g];
    std::vector<int> current;
    Rational acc = 0;
    for (int id : inst.group(g).members) {
      current.push_back(id);
      acc += freq[id - 1];
      if (acc >= q.threshold) {
        classes.push_back(std::move(current));
        current.clear();
        acc = 0;
      }
    }
    if (!current.empty()) classes.push_back(std::move(current));
  }
  return q;
}

std::vector<std::string> CheckClasses(const Instance& inst, const Prototype& y,
                                      const ConstantSet& k,
                                      const ClassFamily& q) {
  std::vector<std::string> errors;
  std::vector<Rational> freq = Coverage(inst, y);
  const long double cap_log =
      static_cast<long double>(k.upsilon.unbounded ? 1e18L : k.upsilon.value + 10) *
      std::log(1.0L / ToDouble(k.epsilon));
  for (int g : q.groups.important) {
    const std::string gname = "group " + std::to_string(inst.group(g).id);
    auto it = q.classes.find(g);
    if (it == q.classes.end()) {
      errors.push_back(gname + " has no classes");
      continue;
    }
    const auto& classes = it->second;
    std::vector<int> flat;
    for (const auto& cls : classes) {
      if (cls.empty()) errors.push_back(gname + " has an empty class");
      flat.insert(flat.end(), cls.begin(), cls.end());
    }
    if (flat != inst.group(g).members) {
      errors.push_back(gname + ": classes do not partition the group in id order");
    }
    for (size_t i = 0; i < classes.size(); ++i) {
      Rational f = 0;
      for (int id : classes[i]) f += freq[id - 1];
      if (i + 1 < classes.size() && f < q.threshold) {
        errors.push_back(gname + " class " + std::to_string(i + 1) +
                         " is below the threshold");
      }
      if (f > q.threshold + 2) {
        errors.push_back(gname + " class " + std::to_string(i + 1) +
                         " exceeds threshold + 2");
      }
      if (i + 1 < classes.size() && !classes[i + 1].empty() && !classes[i].empty()) {
        // The largest item of the next class against the smallest of this one.
        if (inst.size(classes[i + 1].front()) > inst.size(classes[i].back())) {
          errors.push_back(gname + " class " + std::to_string(i + 2) +
                           " does not fit the slots of class " +
                           std::to_string(i + 1));
        }
      }
    }
    if (!classes.empty() &&
        std::log(static_cast<long double>(classes.size())) > cap_log) {
      errors.push_back(gname + " has too many classes");
    }
  }
  return errors;
}

Configuration ProjectConfiguration(const Instance& inst, const Configuration& c,
                                   const ClassFamily& q) {
  std::vector<int> out;
  std::map<int, std::vector<int>> by_group;
  for (int id : c.items) by_group[inst.group_of(id)].push_back(id);
  for (const auto& [g, ids] : by_group) {
    auto it = q.classes.find(g);
    if (it == q.classes.end()) continue;
    for (const auto& cls : it->second) {
      size_t m = 0;
      for (int id : ids) {
        m += std::binary_search(cls.begin(), cls.end(), id);
      }
      out.insert(out.end(), cls.end() - static_cast<long>(m), cls.end());
    }
  }
  return Configuration(std::move(out));
}

namespace {

void Fail(const std::string& what) { throw ContractViolation("shift", what); }

std::map<int, int> GroupCounts(const Instance& inst, const Configuration& c) {
  std::map<int, int> m;
  for (int id : c.items) ++m[inst.group_of(id)];
  return m;
}

}  // namespace

ShiftResult Shift(const Instance& inst, const Prototype& y, const ConstantSet& k,
                  bool check_polytope) {
  const Rational& eps = k.epsilon;
  const Rational norm_y = Norm(y);
  std::vector<Rational> freq = Coverage(inst, y);
  Rational small_load = 0;
  for (int id = 1; id <= inst.n(); ++id) {
    if (freq[id - 1] > 2) Fail("input frequency of item " + std::to_string(id) + " exceeds 2");
    if (!IsLarge(inst, id, eps)) small_load += freq[id - 1] * inst.size(id);
  }
  if (small_load > eps * norm_y) {
    Fail("frequency-weighted small size exceeds eps * ||y||");
  }

  ShiftResult res;
  res.classes = BuildClasses(inst, y, k);
  const ClassFamily& q = res.classes;
  const Rational& t = q.threshold;
  if (sgn(norm_y) > 0 && sgn(t) <= 0) Fail("nonpositive class threshold");

  Prototype u;
  for (const auto& [c, v] : y) {
    Configuration p = ProjectConfiguration(inst, c, q);
    if (SizeOf(inst, p) > SizeOf(inst, c)) Fail("projection of " + ToString(c) + " grew in size");
    if (p.size() > c.size()) Fail("projection of " + ToString(c) + " grew in cardinality");
    std::map<int, int> pc = GroupCounts(inst, p), cc = GroupCounts(inst, c);
    for (const auto& [g, m] : pc) {
      if (m > cc[g]) Fail("projection of " + ToString(c) + " grew within a group");
    }
    if (FitConfigThreshold(inst, p, eps) < FitConfigThreshold(inst, c, eps)) {
      Fail("projection of " + ToString(c) + " shrank its fit set");
    }
    AddTo(u, p, v);
  }
  res.projected_support = static_cast<int>(u.size());
  if (!u.empty() &&
      std::log(static_cast<long double>(u.size())) > k.SupportCapLog()) {
    Fail("projected support exceeds its cap");
  }

  Prototype& z = res.z;
  if (sgn(norm_y) > 0) {
    const Rational factor = 1 + 2 / t;
    for (const auto& [c, v] : u) AddTo(z, c, factor * v);
  }
  AddTo(z, Configuration(), 4 * eps * norm_y + Pow(eps, -3));
  for (int g : q.groups.important) {
    AddTo(z, Configuration({inst.group(g).members.front()}), t + 2);
  }

  const Rational excess = Norm(z) - (1 + 5 * eps) * norm_y;
  if (!LeqExp(excess, k.Q_log)) Fail("||z|| exceeds (1+5eps)||y|| + Q(eps)");
  if (std::log(static_cast<long double>(z.size())) > k.SupportCapLog()) {
    Fail("support of z exceeds Q(eps)");
  }
  for (const auto& [c, v] : z) {
    if (!IsConfiguration(inst, c)) Fail(ToString(c) + " is not a configuration");
    if (!k.config_size_cap.Admits(c.size())) {
      Fail("configuration " + ToString(c) + " exceeds eps^-10 items");
    }
  }
  if (check_polytope) {
    res.polytope_nonempty = PolytopeNonempty(BuildPolytope(inst, z, eps, true));
    if (!res.polytope_nonempty) Fail("z-polytope is empty");
  }
  return res;
}

std::string DumpClassTable(const Instance& inst, const Prototype& y,
                           const ClassFamily& q) {
  std::vector<Rational> freq = Coverage(inst, y);
  std::ostringstream out;
  out << "threshold " << ToString(q.threshold) << "\n";
  out << "group,class,first_id,last_id,size,frequency\n";
  for (const auto& [g, classes] : q.classes) {
    for (size_t i = 0; i < classes.size(); ++i) {
      Rational f = 0;
      for (int id : classes[i]) f += freq[id - 1];
      out << inst.group(g).id << "," << i + 1 << "," << classes[i].front() << ","
          << classes[i].back() << "," << ToString(SizeOf(inst, classes[i])) << ","
          << ToString(f) << "\n";
    }
  }
  return out.str();
}

}  // namespace bpp
