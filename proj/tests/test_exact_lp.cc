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

#include <random>

#include "bpp/exact_lp.h"
#include "doctest.h"
#include "helpers.h"
#include "oracles/brute.h"

namespace bpp {
namespace {

using test::Q;

TEST_CASE("max x s.t. x <= 3") {
  LinearProgram lp;
  int x = lp.AddVariable();
  lp.AddConstraint({{x, 1}}, Relation::kLe, 3);
  lp.objective = {{x, 1}};
  lp.maximize = true;
  BasicSolution s = SolveLp(lp);
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK(s.values[0] == 3);
  CHECK(s.objective_value == 3);
}

TEST_CASE("max x + y s.t. x + y <= 1, x <= 1/2") {
  LinearProgram lp;
  int x = lp.AddVariable(), y = lp.AddVariable();
  lp.AddConstraint({{x, 1}, {y, 1}}, Relation::kLe, 1);
  lp.AddConstraint({{x, 1}}, Relation::kLe, Q("1/2"));
  lp.objective = {{x, 1}, {y, 1}};
  lp.maximize = true;
  BasicSolution s = SolveLp(lp);
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK(s.objective_value == 1);
  CHECK(brute::TightRank(lp, s.values) == 2);
}

TEST_CASE("infeasible and unbounded statuses") {
  LinearProgram lp;
  int x = lp.AddVariable();
  lp.AddConstraint({{x, 1}}, Relation::kGe, 1);
  lp.AddConstraint({{x, 1}}, Relation::kLe, 0);
  CHECK(SolveLp(lp).status == LpStatus::kInfeasible);
  CHECK(FeasibleVertex(lp).status == LpStatus::kInfeasible);

  LinearProgram u;
  int a = u.AddVariable();
  u.AddConstraint({{a, 1}}, Relation::kGe, 1);
  u.objective = {{a, 1}};
  u.maximize = true;
  CHECK(SolveLp(u).status == LpStatus::kUnbounded);
}

TEST_CASE("feasible_vertex") {
  LinearProgram one;
  int x = one.AddVariable();
  one.AddConstraint({{x, 1}}, Relation::kEq, 2);
  BasicSolution s = FeasibleVertex(one);
  REQUIRE(s.status == LpStatus::kOptimal);
  CHECK(s.values[0] == 2);

  LinearProgram seg;
  int a = seg.AddVariable(), b = seg.AddVariable();
  seg.AddConstraint({{a, 1}, {b, 1}}, Relation::kEq, 1);
  BasicSolution v = FeasibleVertex(seg);
  REQUIRE(v.status == LpStatus::kOptimal);
  CHECK(((v.values[0] == 1 && v.values[1] == 0) || (v.values[0] == 0 && v.values[1] == 1)));

  LinearProgram empty;
  empty.AddVariable();
  empty.AddVariable();
  BasicSolution e = FeasibleVertex(empty);
  REQUIRE(e.status == LpStatus::kOptimal);
  CHECK(e.values[0] == 0);
  CHECK(e.values[1] == 0);
}

// Bounded random LPs: a box x_v <= u_v keeps brute-force enumeration honest.
LinearProgram RandomLp(std::mt19937_64& rng) {
  LinearProgram lp;
  const int n = 2 + static_cast<int>(rng() % 3);
  const int m = 1 + static_cast<int>(rng() % 3);
  for (int v = 0; v < n; ++v) lp.AddVariable();
  for (int v = 0; v < n; ++v) {
    lp.AddConstraint({{v, 1}}, Relation::kLe, 1 + static_cast<long>(rng() % 5));
  }
  for (int i = 0; i < m; ++i) {
    SparseRow row;
    for (int v = 0; v < n; ++v) {
      long c = static_cast<long>(rng() % 7) - 2;
      if (c) row.emplace_back(v, test::Frac(c, 1 + static_cast<int64_t>(rng() % 3)));
    }
    Relation rel = static_cast<Relation>(rng() % 3);
    lp.AddConstraint(row, rel, test::Frac(static_cast<int64_t>(rng() % 9) - 2, 2));
  }
  for (int v = 0; v < n; ++v) {
    long c = static_cast<long>(rng() % 9) - 4;
    if (c) lp.objective.emplace_back(v, c);
  }
  lp.maximize = rng() % 2;
  return lp;
}

TEST_CASE("optimal values match vertex enumeration and points are basic") {
  std::mt19937_64 rng(2026);
  int optimal = 0;
  for (int round = 0; round < 300; ++round) {
    LinearProgram lp = RandomLp(rng);
    BasicSolution s = SolveLp(lp);
    std::optional<Rational> best = brute::VertexOptimum(lp);
    if (!best) {
      CHECK(s.status == LpStatus::kInfeasible);
      continue;
    }
    REQUIRE(s.status == LpStatus::kOptimal);
    ++optimal;
    CHECK(s.objective_value == *best);
    CHECK(brute::Feasible(lp, s.values));
    CHECK(brute::TightRank(lp, s.values) == lp.num_vars);
    BasicSolution f = FeasibleVertex(lp);
    REQUIRE(f.status == LpStatus::kOptimal);
    CHECK(brute::Feasible(lp, f.values));
    CHECK(brute::TightRank(lp, f.values) == lp.num_vars);
  }
  CHECK(optimal > 100);
}

TEST_CASE("incremental columns reach the same optimum as a fresh solve") {
  // min x1 + x2 + x3 s.t. x1 + x3 >= 1, x2 + x3 >= 1; x3 arrives late.
  LinearProgram lp;
  int a = lp.AddVariable(), b = lp.AddVariable();
  lp.AddConstraint({{a, 1}}, Relation::kGe, 1);
  lp.AddConstraint({{b, 1}}, Relation::kGe, 1);
  lp.objective = {{a, 1}, {b, 1}};
  SimplexSolver solver(lp);
  REQUIRE(solver.Solve() == LpStatus::kOptimal);
  CHECK(solver.Objective() == 2);
  std::vector<Rational> y = solver.Duals();
  CHECK(y[0] == 1);
  CHECK(y[1] == 1);
  solver.AddColumn({{0, 1}, {1, 1}}, 1);
  REQUIRE(solver.Reoptimize() == LpStatus::kOptimal);
  CHECK(solver.Objective() == 1);
}

}  // namespace
}  // namespace bpp
