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

#include "bpp/exact_lp.h"

#include <algorithm>
#include <stdexcept>

namespace bpp {

void LinearProgram::AddConstraint(SparseRow coeffs, Relation rel, Rational rhs) {
  constraints.push_back(LinearConstraint{std::move(coeffs), rel, std::move(rhs)});
}

const char* ToString(LpStatus s) {
  switch (s) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "?";
}

namespace {

// After this many consecutive degenerate pivots the entering rule switches
// from most-negative reduced cost to Bland's rule for the rest of the phase.
constexpr int kDegenerateLimit = 50;

enum class ColKind { kStruct, kSlack, kArtificial };

SparseRow Canonical(const SparseRow& in) {
  SparseRow row = in;
  std::sort(row.begin(), row.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseRow out;
  for (auto& [j, v] : row) {
    if (!out.empty() && out.back().first == j) {
      out.back().second += v;
    } else {
      out.emplace_back(j, v);
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const auto& e) { return sgn(e.second) == 0; }),
            out.end());
  return out;
}

const Rational* Find(const SparseRow& row, int col) {
  auto it = std::lower_bound(
      row.begin(), row.end(), col,
      [](const std::pair<int, Rational>& e, int c) { return e.first < c; });
  if (it == row.end() || it->first != col) return nullptr;
  return &it->second;
}

}  // namespace

struct SimplexSolver::Impl {
  int num_cons = 0;
  bool maximize = false;
  bool has_equality = false;

  std::vector<ColKind> kind;
  std::vector<int> ref;
  std::vector<Rational> cost;  // phase 2, minimization form
  std::vector<bool> barred;
  std::vector<int> var_col;
  std::vector<int> slack_col;
  std::vector<int> flip;
  std::vector<int> sigma;

  std::vector<SparseRow> rows;
  std::vector<Rational> rhs;
  std::vector<int> basic;
  std::vector<int> row_cons;

  std::vector<Rational> d;
  Rational z;
  bool feasible = false;
  long pivots = 0;

  int NewColumn(ColKind k, int r, const Rational& c) {
    kind.push_back(k);
    ref.push_back(r);
    cost.push_back(c);
    barred.push_back(false);
    return static_cast<int>(kind.size()) - 1;
  }

  void Pivot(int r, int c) {
    ++pivots;
    SparseRow& pr = rows[r];
    Rational inv = 1 / *Find(pr, c);
    for (auto& e : pr) e.second *= inv;
    rhs[r] *= inv;
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r) continue;
      const Rational* f = Find(rows[i], c);
      if (!f) continue;
      Rational factor = *f;
      SparseRow merged;
      merged.reserve(rows[i].size() + pr.size());
      auto a = rows[i].begin();
      auto b = pr.begin();
      while (a != rows[i].end() || b != pr.end()) {
        if (b == pr.end() || (a != rows[i].end() && a->first < b->first)) {
          merged.push_back(std::move(*a));
          ++a;
        } else if (a == rows[i].end() || b->first < a->first) {
          merged.emplace_back(b->first, -factor * b->second);
          ++b;
        } else {
          Rational v = a->second - factor * b->second;
          if (sgn(v) != 0) merged.emplace_back(a->first, std::move(v));
          ++a;
          ++b;
        }
      }
      rows[i] = std::move(merged);
      rhs[i] -= factor * rhs[r];
    }
    if (sgn(d[c]) != 0) {
      Rational factor = d[c];
      for (const auto& [j, v] : pr) d[j] -= factor * v;
      z += factor * rhs[r];
      d[c] = 0;
    }
    basic[r] = c;
  }

  // Runs the simplex loop with the current reduced costs. Returns false when
  // unbounded.
  bool Iterate() {
    bool bland = false;
    int degenerate = 0;
    std::vector<int> nonzero_rows;
    for (;;) {
      int enter = -1;
      for (int j = 0; j < static_cast<int>(d.size()); ++j) {
        if (barred[j] || sgn(d[j]) >= 0) continue;
        if (enter < 0) {
          enter = j;
          if (bland) break;
        } else if (d[j] < d[enter]) {
          enter = j;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
        const Rational* a = Find(rows[r], enter);
        if (!a || sgn(*a) <= 0) continue;
        Rational ratio = rhs[r] / *a;
        if (leave < 0 || ratio < best ||
            (ratio == best && basic[r] < basic[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave < 0) return false;
      if (sgn(best) == 0) {
        if (++degenerate >= kDegenerateLimit) bland = true;
      } else {
        degenerate = 0;
      }
      Pivot(leave, enter);
    }
  }

  void ResetReducedCosts(const std::vector<Rational>& c) {
    d = c;
    z = 0;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      const Rational& cb = c[basic[r]];
      if (sgn(cb) == 0) continue;
      for (const auto& [j, v] : rows[r]) d[j] -= cb * v;
      z += cb * rhs[r];
    }
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) d[basic[r]] = 0;
  }

  LpStatus Phase1() {
    std::vector<Rational> c1(kind.size());
    for (size_t j = 0; j < kind.size(); ++j) {
      if (kind[j] == ColKind::kArtificial) c1[j] = 1;
    }
    for (size_t j = 0; j < kind.size(); ++j) {
      barred[j] = kind[j] == ColKind::kArtificial;
    }
    ResetReducedCosts(c1);
    Iterate();
    if (sgn(z) > 0) return LpStatus::kInfeasible;
    // Drive remaining artificials out of the basis; rows where that is
    // impossible are linearly dependent and dropped.
    for (int r = 0; r < static_cast<int>(rows.size());) {
      if (kind[basic[r]] != ColKind::kArtificial) {
        ++r;
        continue;
      }
      int col = -1;
      for (const auto& [j, v] : rows[r]) {
        if (kind[j] != ColKind::kArtificial) {
          col = j;
          break;
        }
      }
      if (col >= 0) {
        Pivot(r, col);
        ++r;
      } else {
        rows.erase(rows.begin() + r);
        rhs.erase(rhs.begin() + r);
        basic.erase(basic.begin() + r);
        row_cons.erase(row_cons.begin() + r);
      }
    }
    for (SparseRow& row : rows) {
      row.erase(std::remove_if(row.begin(), row.end(),
                               [&](const auto& e) {
                                 return kind[e.first] == ColKind::kArtificial;
                               }),
                row.end());
    }
    feasible = true;
    return LpStatus::kOptimal;
  }

  LpStatus Phase2() {
    ResetReducedCosts(cost);
    for (size_t j = 0; j < kind.size(); ++j) {
      if (kind[j] == ColKind::kArtificial) {
        barred[j] = true;
        d[j] = 0;
      }
    }
    return Iterate() ? LpStatus::kOptimal : LpStatus::kUnbounded;
  }
};

SimplexSolver::SimplexSolver(const LinearProgram& lp)
    : impl_(std::make_unique<Impl>()) {
  Impl& s = *impl_;
  s.num_cons = static_cast<int>(lp.constraints.size());
  s.maximize = lp.maximize;
  std::vector<Rational> obj(lp.num_vars);
  for (const auto& [j, v] : lp.objective) {
    if (j < 0 || j >= lp.num_vars) throw std::out_of_range("objective index");
    obj[j] += v;
  }
  for (int v = 0; v < lp.num_vars; ++v) {
    s.var_col.push_back(
        s.NewColumn(ColKind::kStruct, v, lp.maximize ? Rational(-obj[v]) : obj[v]));
  }
  s.slack_col.assign(s.num_cons, -1);
  s.flip.assign(s.num_cons, 1);
  s.sigma.assign(s.num_cons, 0);
  std::vector<SparseRow> std_rows(s.num_cons);
  for (int i = 0; i < s.num_cons; ++i) {
    const LinearConstraint& con = lp.constraints[i];
    for (const auto& [j, v] : con.coeffs) {
      if (j < 0 || j >= lp.num_vars) throw std::out_of_range("constraint index");
    }
    SparseRow row = Canonical(con.coeffs);
    Rational b = con.rhs;
    if (sgn(b) < 0) {
      s.flip[i] = -1;
      b = -b;
      for (auto& e : row) e.second = -e.second;
    }
    if (con.rel != Relation::kEq) {
      s.sigma[i] = (con.rel == Relation::kLe ? 1 : -1) * s.flip[i];
      s.slack_col[i] = s.NewColumn(ColKind::kSlack, i, 0);
      row.emplace_back(s.slack_col[i], s.sigma[i]);
    } else {
      s.has_equality = true;
    }
    std_rows[i] = std::move(row);
    s.rhs.push_back(b);
    s.row_cons.push_back(i);
  }
  for (int i = 0; i < s.num_cons; ++i) {
    if (s.sigma[i] == 1) {
      s.basic.push_back(s.slack_col[i]);
    } else {
      int a = s.NewColumn(ColKind::kArtificial, i, 0);
      std_rows[i].emplace_back(a, 1);
      s.basic.push_back(a);
    }
  }
  s.rows = std::move(std_rows);
}

SimplexSolver::~SimplexSolver() = default;

LpStatus SimplexSolver::Solve(bool feasibility_only) {
  LpStatus st = impl_->Phase1();
  if (st != LpStatus::kOptimal || feasibility_only) return st;
  return impl_->Phase2();
}

int SimplexSolver::AddColumn(const SparseRow& coeffs, const Rational& cost) {
  Impl& s = *impl_;
  if (!s.feasible || s.has_equality ||
      static_cast<int>(s.rows.size()) != s.num_cons) {
    throw std::logic_error("AddColumn needs a solved inequality-only LP");
  }
  SparseRow a = Canonical(coeffs);
  for (auto& [i, v] : a) {
    if (i < 0 || i >= s.num_cons) throw std::out_of_range("row index");
    v *= s.flip[i] * s.sigma[i];
  }
  int var = static_cast<int>(s.var_col.size());
  int col = s.NewColumn(ColKind::kStruct, var,
                        s.maximize ? Rational(-cost) : cost);
  s.var_col.push_back(col);
  Rational dj = s.cost[col];
  for (const auto& [i, v] : a) {
    // y'_i = -sigma_i d(slack_i); v already carries sigma_i.
    dj += v * s.d[s.slack_col[i]] * s.sigma[i] * s.sigma[i];
  }
  s.d.push_back(dj);
  for (int r = 0; r < static_cast<int>(s.rows.size()); ++r) {
    Rational t = 0;
    for (const auto& [i, v] : a) {
      const Rational* e = Find(s.rows[r], s.slack_col[i]);
      if (e) t += v * *e;
    }
    if (sgn(t) != 0) s.rows[r].emplace_back(col, std::move(t));
  }
  return var;
}

LpStatus SimplexSolver::Reoptimize() {
  Impl& s = *impl_;
  for (size_t j = 0; j < s.kind.size(); ++j) {
    if (s.kind[j] == ColKind::kArtificial) s.barred[j] = true;
  }
  return s.Iterate() ? LpStatus::kOptimal : LpStatus::kUnbounded;
}

std::vector<Rational> SimplexSolver::Values() const {
  const Impl& s = *impl_;
  std::vector<int> row_of(s.kind.size(), -1);
  for (int r = 0; r < static_cast<int>(s.rows.size()); ++r) row_of[s.basic[r]] = r;
  std::vector<Rational> out(s.var_col.size());
  for (size_t v = 0; v < s.var_col.size(); ++v) {
    int r = row_of[s.var_col[v]];
    if (r >= 0) out[v] = s.rhs[r];
  }
  return out;
}

Rational SimplexSolver::Objective() const {
  return impl_->maximize ? Rational(-impl_->z) : impl_->z;
}

std::vector<Rational> SimplexSolver::Duals() const {
  const Impl& s = *impl_;
  if (s.has_equality) throw std::logic_error("duals need inequality rows");
  std::vector<Rational> y(s.num_cons);
  for (int i = 0; i < s.num_cons; ++i) {
    // y'_i = c_B B^-1 e_i = -sigma_i d(slack_i); undo the row flip.
    y[i] = -s.sigma[i] * s.flip[i] * s.d[s.slack_col[i]];
    if (s.maximize) y[i] = -y[i];
  }
  return y;
}

std::vector<int> SimplexSolver::Basis() const {
  const Impl& s = *impl_;
  int nv = static_cast<int>(s.var_col.size());
  std::vector<int> out;
  for (int b : s.basic) {
    out.push_back(s.kind[b] == ColKind::kStruct ? s.ref[b] : nv + s.ref[b]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

long SimplexSolver::pivots() const { return impl_->pivots; }

namespace {

BasicSolution Run(const LinearProgram& lp, bool feasibility_only) {
  SimplexSolver solver(lp);
  BasicSolution sol;
  sol.status = solver.Solve(feasibility_only);
  sol.pivots = solver.pivots();
  if (sol.status == LpStatus::kInfeasible) return sol;
  sol.values = solver.Values();
  sol.basis = solver.Basis();
  if (feasibility_only) {
    Rational obj = 0;
    for (const auto& [j, v] : lp.objective) obj += v * sol.values[j];
    sol.objective_value = obj;
  } else if (sol.status == LpStatus::kOptimal) {
    sol.objective_value = solver.Objective();
  }
  return sol;
}

}  // namespace

BasicSolution SolveLp(const LinearProgram& lp) { return Run(lp, false); }

BasicSolution FeasibleVertex(const LinearProgram& lp) { return Run(lp, true); }

}  // namespace bpp
