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

// Configuration LP by column generation. The pricing problem is a knapsack
// under the partition matroid: maximize the total weight of a configuration.

#ifndef BPP_CONFIG_LP_H_
#define BPP_CONFIG_LP_H_

#include <vector>

#include "bpp/core.h"

namespace bpp {

enum class PricingMode { kAuto, kExact, kFptas };

// Instances up to this many items are priced exactly in kAuto mode.
inline constexpr int kExactPricingLimit = 64;

struct PricingResult {
  Configuration config;
  Rational value;
  long nodes = 0;
};

// weights[id - 1] >= 0. kExact returns a maximum-weight configuration;
// kFptas returns one of weight >= (1 - eps_prime) * optimum.
PricingResult PriceConfiguration(const Instance& inst,
                                 const std::vector<Rational>& weights,
                                 PricingMode mode, const Rational& eps_prime);

// Exact pricing that ignores configurations of weight <= floor. Returns the
// empty configuration with value 0 if nothing beats the floor.
PricingResult PriceAboveFloor(const Instance& inst,
                              const std::vector<Rational>& weights,
                              const Rational& floor);

struct ConfigLpResult {
  Prototype x;              // equality coverage
  Rational master_value;    // objective of the final restricted master
  int iterations = 0;
  int columns = 0;
  long pivots = 0;        // exact master pivots
  long float_pivots = 0;  // floating-point warm start
  bool exact_pricing = true;
};

ConfigLpResult SolveConfigurationLp(const Instance& inst, const Rational& eps,
                                    PricingMode mode = PricingMode::kAuto);

// Moves over-coverage weight from C to C \ {l} until every item is covered
// exactly once. Throws InvalidInput if some item is under-covered.
Prototype NormalizeToEquality(const Instance& inst, const Prototype& x_ge);

// sum over C containing id of x_C, for every item (index id - 1).
std::vector<Rational> Coverage(const Instance& inst, const Prototype& x);

}  // namespace bpp

#endif  // BPP_CONFIG_LP_H_
