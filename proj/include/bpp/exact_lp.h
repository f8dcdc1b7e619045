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

// Exact rational simplex. Variables are nonnegative; returned points are
// basic feasible solutions.

#ifndef BPP_EXACT_LP_H_
#define BPP_EXACT_LP_H_

#include <memory>
#include <utility>
#include <vector>

#include "bpp/rational.h"

namespace bpp {

using SparseRow = std::vector<std::pair<int, Rational>>;

enum class Relation { kLe, kEq, kGe };

struct LinearConstraint {
  SparseRow coeffs;
  Relation rel = Relation::kLe;
  Rational rhs;
};

struct LinearProgram {
  int num_vars = 0;
  std::vector<LinearConstraint> constraints;
  SparseRow objective;
  bool maximize = false;

  int AddVariable() { return num_vars++; }
  void AddConstraint(SparseRow coeffs, Relation rel, Rational rhs);
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* ToString(LpStatus s);

struct BasicSolution {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> values;  // one per variable
  // Basic columns: variable v is v, the slack of constraint i is
  // num_vars + i.
  std::vector<int> basis;
  Rational objective_value;
  long pivots = 0;
};

BasicSolution SolveLp(const LinearProgram& lp);
// Phase 1 only: some vertex of the feasible region, or infeasible.
BasicSolution FeasibleVertex(const LinearProgram& lp);

// Stateful tableau used when columns arrive over time (column generation).
// Only inequality constraints are supported there, so every row keeps a
// slack column from which the basis inverse can be read.
class SimplexSolver {
 public:
  explicit SimplexSolver(const LinearProgram& lp);
  ~SimplexSolver();
  SimplexSolver(const SimplexSolver&) = delete;
  SimplexSolver& operator=(const SimplexSolver&) = delete;

  // Phase 1 then (unless feasibility_only) phase 2.
  LpStatus Solve(bool feasibility_only = false);
  // Appends a variable with the given column; returns its index. Call
  // Reoptimize() afterwards.
  int AddColumn(const SparseRow& coeffs, const Rational& cost);
  LpStatus Reoptimize();

  std::vector<Rational> Values() const;
  Rational Objective() const;
  // Dual value per original constraint (sign convention of the original
  // objective direction).
  std::vector<Rational> Duals() const;
  std::vector<int> Basis() const;
  long pivots() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace bpp

#endif  // BPP_EXACT_LP_H_
