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

// End-to-end solver: LP, Evict, Shift, Partition and Pack on a structured
// instance, wrapped by Reduce and Reconstruct.

#ifndef BPP_PIPELINE_H_
#define BPP_PIPELINE_H_

#include <map>
#include <string>
#include <vector>

#include "bpp/config_lp.h"
#include "bpp/core.h"
#include "json.hpp"

namespace bpp {

struct SolveOptions {
  PricingMode pricing = PricingMode::kAuto;
  bool check_polytopes = true;
  std::string dump_dir;  // stage dumps are written here when nonempty
};

struct StageStats {
  // reduce
  int pivot = 0;
  int64_t kappa = 0;
  int gamma = 0;
  int omega = 0;
  // lp
  int lp_columns = 0;
  int lp_iterations = 0;
  long lp_pivots = 0;
  long lp_float_pivots = 0;
  bool exact_pricing = true;
  Rational x_norm;
  int x_support = 0;
  // evict
  Rational y_norm;
  int y_support = 0;
  int capped = 0;
  Rational max_frequency;
  // shift
  Rational z_norm;
  int z_support = 0;
  int important_groups = 0;
  // partition
  Rational z_star_norm;
  std::string partition_size;  // may exceed 64 bits
  int categories = 0;
  int fractional = 0;
  int matched = 0;
  // pack
  int structured_bins = 0;
  int pack_extra_bins = 0;
  // reconstruct
  int fill_r = 0;
  int discarded = 0;
  int greedy_bins = 0;
  std::vector<std::string> soft_failures;
};

struct SolveResult {
  Packing packing;
  int bins = 0;
  Rational lp_lower_bound;  // configuration LP value of the structured instance
  StageStats stages;
  Rational epsilon_used;
  std::map<std::string, double> timings;  // seconds per stage
};

// inst must be eps-structured.
Packing AfptasStructured(const Instance& inst, const ConstantSet& k,
                         const SolveOptions& opt = {}, SolveResult* result = nullptr);

SolveResult GenAfptas(const Instance& inst, const ConstantSet& k,
                      const SolveOptions& opt = {});

struct AutoEpsilonResult {
  Rational epsilon;
  bool theory_mode = true;
  Rational recommended;    // practical choice
  BigInt log_log_w_floor;  // floor(ln ln W)
};

// eps = 1 / floor((ln ln W)^(1/17)) with W = s(I) + V(I) + exp(exp(100^17)).
AutoEpsilonResult AutoEpsilon(const Instance& inst);

nlohmann::json ReportJson(const SolveResult& r, bool timings);

}  // namespace bpp

#endif  // BPP_PIPELINE_H_
