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

// Ground truth for small instances: exact branch and bound and a
// cap-aware First-Fit Decreasing.

#ifndef BPP_ORACLE_H_
#define BPP_ORACLE_H_

#include <cstdint>
#include <optional>

#include "bpp/core.h"

namespace bpp {

struct OracleLimits {
  int64_t node_limit = 20'000'000;
  double time_limit_s = 60.0;
  // Any valid lower bound, e.g. the configuration LP value.
  std::optional<Rational> lower_bound;
};

enum class OracleStatus { kOptimal, kCapExceeded };

struct OracleResult {
  OracleStatus status = OracleStatus::kOptimal;
  int64_t bins = 0;         // best found; optimal iff status is kOptimal
  int64_t lower_bound = 0;  // max of ceil(s), V and the supplied bound
  Packing packing;
  int64_t nodes = 0;
};

// Branches on the largest unpacked item: each open bin it fits, then one new
// bin. Bins in identical states are tried once.
OracleResult ExactOpt(const Instance& inst, const OracleLimits& limits = {});

// Items by id; each goes to the first bin with room and a free group slot.
Packing FirstFitDecreasing(const Instance& inst);

}  // namespace bpp

#endif  // BPP_ORACLE_H_
