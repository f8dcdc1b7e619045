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

#include "bpp/polytope.h"

#include <set>
#include <sstream>

namespace bpp {

std::string ToString(const TypeKey& t) {
  if (t.is_slot) return "slot " + std::to_string(t.slot);
  return "config " + ToString(t.config);
}

PolytopeSpec BuildPolytope(const Instance& inst, const Prototype& x,
                           const Rational& eps, bool cross_slots) {
  PolytopeSpec spec;
  spec.inst = &inst;
  spec.x = x;
  spec.eps = eps;
  spec.cross_slots = cross_slots;
  std::set<int> slots;
  for (const auto& [c, v] : x) {
    if (sgn(v) > 0) slots.insert(c.items.begin(), c.items.end());
  }
  for (int j : slots) spec.types.push_back(TypeKey::Slot(j));
  std::vector<Rational> thresholds;
  for (const auto& [c, v] : x) {
    if (sgn(v) <= 0) continue;
    spec.types.push_back(TypeKey::Config(c));
  }
  thresholds.resize(spec.types.size());
  for (size_t t = 0; t < spec.types.size(); ++t) {
    if (!spec.types[t].is_slot) {
      thresholds[t] = FitConfigThreshold(inst, spec.types[t].config, eps);
    }
  }
  for (int id = 1; id <= inst.n(); ++id) {
    for (size_t t = 0; t < spec.types.size(); ++t) {
      const TypeKey& type = spec.types[t];
      bool fits;
      if (type.is_slot) {
        fits = cross_slots ? inst.group_of(id) == inst.group_of(type.slot) &&
                                 inst.size(id) <= inst.size(type.slot)
                           : id == type.slot;
      } else {
        fits = inst.size(id) <= thresholds[t];
      }
      if (fits) spec.vars.emplace_back(id, static_cast<int>(t));
    }
  }
  return spec;
}

namespace {

struct Rows {
  std::vector<std::string> names;
  LinearProgram lp;
};

Rows BuildRows(const PolytopeSpec& spec, bool drop_redundant) {
  const Instance& inst = *spec.inst;
  Rows out;
  LinearProgram& lp = out.lp;
  lp.num_vars = static_cast<int>(spec.vars.size());
  std::vector<std::vector<int>> by_item(inst.n() + 1);
  std::vector<std::vector<int>> by_type(spec.types.size());
  for (int v = 0; v < lp.num_vars; ++v) {
    by_item[spec.vars[v].first].push_back(v);
    by_type[spec.vars[v].second].push_back(v);
  }
  for (int id = 1; id <= inst.n(); ++id) {
    SparseRow row;
    for (int v : by_item[id]) row.emplace_back(v, 1);
    lp.AddConstraint(std::move(row), Relation::kEq, 1);
    out.names.push_back("cover[" + std::to_string(id) + "]");
  }
  for (size_t t = 0; t < spec.types.size(); ++t) {
    const TypeKey& type = spec.types[t];
    if (by_type[t].empty()) continue;
    if (type.is_slot) {
      Rational cap = 0;
      for (const auto& [c, v] : spec.x) {
        if (c.Contains(type.slot)) cap += v;
      }
      if (drop_redundant && static_cast<long>(by_type[t].size()) <= cap) continue;
      SparseRow row;
      for (int v : by_type[t]) row.emplace_back(v, 1);
      lp.AddConstraint(std::move(row), Relation::kLe, cap);
      out.names.push_back("slots[" + std::to_string(type.slot) + "]");
      continue;
    }
    const Configuration& c = type.config;
    const Rational& xc = spec.x.at(c);
    Rational cap = (1 - SizeOf(inst, c)) * xc;
    Rational load = 0;
    SparseRow row;
    for (int v : by_type[t]) {
      const Rational& s = inst.size(spec.vars[v].first);
      load += s;
      row.emplace_back(v, s);
    }
    if (!(drop_redundant && load <= cap)) {
      lp.AddConstraint(std::move(row), Relation::kLe, cap);
      out.names.push_back("capacity[" + ToString(c) + "]");
    }
    std::map<int, std::vector<int>> per_group;
    for (int v : by_type[t]) {
      per_group[inst.group_of(spec.vars[v].first)].push_back(v);
    }
    for (const auto& [g, vs] : per_group) {
      int64_t in_c = 0;
      for (int id : c.items) in_c += inst.group_of(id) == g;
      Rational gcap = xc * (inst.group(g).k - in_c);
      if (drop_redundant && static_cast<long>(vs.size()) <= gcap) continue;
      SparseRow grow;
      for (int v : vs) grow.emplace_back(v, 1);
      lp.AddConstraint(std::move(grow), Relation::kLe, gcap);
      out.names.push_back("matroid[" + ToString(c) + ",G" +
                          std::to_string(inst.group(g).id) + "]");
    }
  }
  // A configuration type is free, the own slot costs 1, another slot 2.
  for (int v = 0; v < lp.num_vars; ++v) {
    const TypeKey& type = spec.types[spec.vars[v].second];
    if (type.is_slot) {
      lp.objective.emplace_back(v, type.slot == spec.vars[v].first ? 1 : 2);
    }
  }
  return out;
}

}  // namespace

LinearProgram ToLinearProgram(const PolytopeSpec& spec, bool drop_redundant) {
  return BuildRows(spec, drop_redundant).lp;
}

bool PolytopeNonempty(const PolytopeSpec& spec) {
  std::vector<char> has(spec.inst->n() + 1, 0);
  for (const auto& [id, t] : spec.vars) has[id] = 1;
  for (int id = 1; id <= spec.inst->n(); ++id) {
    if (!has[id]) return false;
  }
  return FeasibleVertex(ToLinearProgram(spec, true)).status !=
         LpStatus::kInfeasible;
}

AssignmentPoint VertexWithTightCover(const PolytopeSpec& spec) {
  BasicSolution sol = SolveLp(ToLinearProgram(spec, true));
  if (sol.status != LpStatus::kOptimal) {
    throw ContractViolation("polytope", "polytope is empty");
  }
  AssignmentPoint point;
  for (size_t v = 0; v < spec.vars.size(); ++v) {
    if (sgn(sol.values[v]) > 0) {
      point.emplace(std::make_pair(spec.vars[v].first,
                                   spec.types[spec.vars[v].second]),
                    sol.values[v]);
    }
  }
  return point;
}

std::vector<int> FractionalItems(const AssignmentPoint& point) {
  std::set<int> out;
  for (const auto& [key, v] : point) {
    if (sgn(v) > 0 && v < 1) out.insert(key.first);
  }
  return {out.begin(), out.end()};
}

std::vector<std::string> CheckPoint(const PolytopeSpec& spec,
                                    const AssignmentPoint& point,
                                    bool tight_cover) {
  std::vector<std::string> errors;
  std::map<std::pair<int, TypeKey>, int> allowed;
  for (size_t v = 0; v < spec.vars.size(); ++v) {
    allowed.emplace(std::make_pair(spec.vars[v].first,
                                   spec.types[spec.vars[v].second]),
                    static_cast<int>(v));
  }
  std::vector<Rational> values(spec.vars.size());
  for (const auto& [key, val] : point) {
    auto it = allowed.find(key);
    if (it == allowed.end()) {
      errors.push_back("entry for item " + std::to_string(key.first) +
                       " and " + ToString(key.second) + " violates fit");
      continue;
    }
    if (sgn(val) <= 0 || val > 1) {
      errors.push_back("entry out of (0,1] for item " +
                       std::to_string(key.first));
    }
    values[it->second] = val;
  }
  Rows rows = BuildRows(spec, false);
  for (size_t i = 0; i < rows.lp.constraints.size(); ++i) {
    const LinearConstraint& con = rows.lp.constraints[i];
    Rational lhs = 0;
    for (const auto& [v, a] : con.coeffs) lhs += a * values[v];
    bool ok = true;
    switch (con.rel) {
      case Relation::kLe:
        ok = lhs <= con.rhs;
        break;
      case Relation::kGe:
        ok = lhs >= con.rhs;
        break;
      case Relation::kEq:
        ok = tight_cover ? lhs == con.rhs : lhs >= con.rhs;
        break;
    }
    if (!ok) {
      errors.push_back(rows.names[i] + " violated: " + ToString(lhs) + " vs " +
                       ToString(con.rhs));
    }
  }
  return errors;
}

std::string DumpInequalities(const PolytopeSpec& spec) {
  Rows rows = BuildRows(spec, false);
  std::ostringstream out;
  auto var_name = [&](int v) {
    const auto& [id, t] = spec.vars[v];
    return "g(" + std::to_string(id) + "," + ToString(spec.types[t]) + ")";
  };
  for (size_t i = 0; i < rows.lp.constraints.size(); ++i) {
    const LinearConstraint& con = rows.lp.constraints[i];
    out << rows.names[i] << ": ";
    if (con.coeffs.empty()) out << "0";
    for (size_t k = 0; k < con.coeffs.size(); ++k) {
      if (k) out << " + ";
      const auto& [v, a] = con.coeffs[k];
      if (a != 1) out << ToString(a) << "*";
      out << var_name(v);
    }
    out << (con.rel == Relation::kLe ? " <= " : con.rel == Relation::kGe ? " >= " : " = ")
        << ToString(con.rhs) << "\n";
  }
  return out.str();
}

}  // namespace bpp
