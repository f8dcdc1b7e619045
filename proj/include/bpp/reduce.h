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

// Reduction to a structured instance and the way back. Heavy items of the
// groups outside the first kappa_w are pooled into one union group with a
// loose cap; Reconstruct repairs the caps by linear shifting and repacks the
// displaced small items with Greedy.

#ifndef BPP_REDUCE_H_
#define BPP_REDUCE_H_

#include <optional>
#include <string>
#include <vector>

#include "bpp/core.h"

namespace bpp {

// argmin over i in {2, ..., floor(1/eps) + 1} of s({l : eps^(i+1) <= s < eps^i});
// ties go to the smallest i.
int MinimalPivot(const Instance& inst, const Rational& eps);

struct ReductionMeta {
  int w = 2;
  std::vector<int> heavy;   // s >= eps^w
  std::vector<int> medium;  // eps^(w+1) <= s < eps^w
  std::vector<int> light;
  int64_t kappa = 0;
  std::vector<int> large_groups;  // group indices, sorted by g_w
  std::vector<int> small_groups;  // ascending
  std::vector<int> gamma;         // heavy items of small groups
  std::vector<int> omega;         // medium items of small groups
  SatInt beta;                    // eps^(-w-2)
  std::vector<std::vector<int>> shifting;  // P_1..P_q over gamma
  int64_t union_group_id = 0;
};

struct Reduction {
  Instance structured;  // same item ids and sizes
  ReductionMeta meta;
};

// Asserts that the result is eps-structured (log scale).
Reduction Reduce(const Instance& inst, const ConstantSet& k);

// Groups holding an item of size >= eps^2.
int CountMassiveGroups(const Instance& inst, const Rational& eps);

struct FillResult {
  std::vector<std::vector<int>> B;  // one per bin of A
  std::vector<int> R;
};

// a is a packing of the structured instance. Scans (j, i, l) in order.
FillResult Fill(const Instance& orig, const ReductionMeta& meta, const Packing& a);

// Shifting and cap conditions on a Fill result; empty iff both hold.
std::vector<std::string> CheckFill(const Instance& orig, const ReductionMeta& meta,
                                   const Packing& a, const FillResult& fill);

struct ReconstructStats {
  FillResult fill;
  std::vector<int> discarded;  // D(A)
  int shifted_bins = 0;        // |F_A|
  int greedy_bins = 0;
};

// Asserts the Fill conditions and the validity of the returned packing of
// orig. Empty bins are dropped.
Packing Reconstruct(const Instance& orig, const ConstantSet& k,
                    const ReductionMeta& meta, const Packing& a,
                    ReconstructStats* stats = nullptr);

// Groups outside the first kappa_w all satisfy g_w(G) < eps^(2w+4) opt. The
// bounds below rest on this.
bool SmallGroupPremise(const Instance& orig, const ReductionMeta& meta,
                       const Rational& eps, int64_t opt);

// |R| <= eps opt + 1, s(D) <= eps opt, |D n G| <= eps opt, and
// out_bins <= in_bins + 13 eps opt + 1. Empty iff all hold.
std::vector<std::string> CheckOptBounds(const Instance& orig, const Rational& eps,
                                        const ReconstructStats& stats,
                                        int in_bins, int out_bins, int64_t opt);

}  // namespace bpp

#endif  // BPP_REDUCE_H_
