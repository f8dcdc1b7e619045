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

// Turns a good prototype into a nice partition (bins with templates and
// completion sets) and completes every category with Greedy.
//
// Bin families are stored lazily: the prototype entries can be astronomically
// large, while only a handful of bins per template receive items.

#ifndef BPP_PARTITION_PACK_H_
#define BPP_PARTITION_PACK_H_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bpp/core.h"
#include "bpp/polytope.h"

namespace bpp {

// Entrywise ceiling; asserts ||z*|| <= ||z|| + |supp(z)|.
Prototype Integralize(const Prototype& z);

struct SlotCopy {
  Configuration config;
  int slot = 0;
  int copy = 0;  // 1-based bin index within the family of config
};

struct AssignmentGraph {
  std::vector<int> left;                  // U, ascending
  std::vector<SlotCopy> right;            // materialized copies
  std::vector<std::vector<int>> adj;      // per left vertex, indices into right
};

// Copies of (C, j) are materialized up to the number of items assigned to j.
AssignmentGraph BuildAssignmentGraph(const Instance& inst, const Prototype& z_star,
                                     const AssignmentPoint& gamma);

// Kuhn's augmenting paths; left vertices in order. match[u] = right index or -1.
std::vector<int> MaximumMatching(const AssignmentGraph& g);

// tuple(B_C) = prefix, then empty bins, then tail (at position count).
struct BinFamily {
  BigInt count;
  std::vector<Configuration> prefix;
  std::optional<Configuration> tail;
};

struct NicePartition {
  std::vector<Configuration> categories;  // H
  std::map<Configuration, BinFamily> families;
  std::map<Configuration, std::vector<int>> completions;  // D_C, ascending
  BigInt size;                                            // m
  std::vector<int> fractional;                            // items of F
  int matched = 0;
  int support = 0;
  int max_config_size = 0;
};

// Every materialized bin in tuple order.
std::vector<Configuration> MaterializedBins(const NicePartition& np);

struct PartitionStats {
  Rational z_norm;
  Rational z_star_norm;
  int vertex_vars = 0;
  int vertex_rows = 0;
};

// Asserts the good-prototype caps on z, the fractional-count bound, the
// matching size and the nice-partition conditions.
NicePartition Partition(const Instance& inst, const Prototype& z,
                        const ConstantSet& k, PartitionStats* stats = nullptr);

// Standalone check of the nice-partition conditions; empty iff all hold.
std::vector<std::string> CheckNicePartition(const Instance& inst,
                                            const NicePartition& np,
                                            const ConstantSet& k);

// Bipartite test: each item of a mapped injectively to a slot of c that it
// fits.
bool AllowedIn(const Instance& inst, const Configuration& a, const Configuration& c);

// Items d with sizes s / (1 - s(c)) and caps k(G) - |G n c|.
SubInstance ResidualInstance(const Instance& inst, const Configuration& c,
                             const std::vector<int>& d);

struct PackStats {
  int categories_completed = 0;
  int extra_bins = 0;  // bins beyond the family counts
  // Per category in order: |B_C| and the number of bin positions used.
  std::vector<std::pair<BigInt, BigInt>> positions;
};

// Asserts the per-category bound (1+2eps)|B_C| + 2 and completeness of the
// output. Empty bins are dropped.
Packing Pack(const Instance& inst, const NicePartition& np, const ConstantSet& k,
             PackStats* stats = nullptr);

}  // namespace bpp

#endif  // BPP_PARTITION_PACK_H_
