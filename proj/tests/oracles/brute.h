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

// Test-only reference implementations. None of them calls into the solver
// code; they read Instance and LinearProgram as plain data.

#ifndef BPP_TESTS_ORACLES_BRUTE_H_
#define BPP_TESTS_ORACLES_BRUTE_H_

#include <optional>
#include <string>
#include <vector>

#include "bpp/core.h"
#include "bpp/exact_lp.h"

namespace bpp::brute {

// Every vertex of {x >= 0 : constraints}, by solving each square subsystem of
// tight rows. Meant for a handful of variables and rows.
std::vector<std::vector<Rational>> Vertices(const LinearProgram& lp);

// Optimum over the vertices; nullopt if there are none. The caller must keep
// the region bounded.
std::optional<Rational> VertexOptimum(const LinearProgram& lp);

// Rank of the rows (constraints and x_v >= 0) tight at x.
int TightRank(const LinearProgram& lp, const std::vector<Rational>& x);

bool Feasible(const LinearProgram& lp, const std::vector<Rational>& x);

// Bitmask subsets of the items that are configurations; n <= 20.
std::vector<uint32_t> AllConfigurations(const Instance& inst);

// min sum x_C s.t. every item covered >= 1 over all configurations, by a dense
// tableau simplex started from the singleton basis (Bland's rule).
Rational FullConfigurationLp(const Instance& inst);

// Minimum number of bins over all set partitions; n <= 10.
int SetPartitionOpt(const Instance& inst);

// Bins within capacity and caps, pairwise disjoint, covering every item.
std::vector<std::string> CheckPacking(const Instance& inst, const Packing& p);

}  // namespace bpp::brute

#endif  // BPP_TESTS_ORACLES_BRUTE_H_
