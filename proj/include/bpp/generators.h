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

// Seeded random instances. Draws use mt19937_64 with our own bounded
// sampling, so a seed gives the same instance on every platform.

#ifndef BPP_GENERATORS_H_
#define BPP_GENERATORS_H_

#include <cstdint>
#include <random>
#include <string>

#include "bpp/core.h"

namespace bpp {

enum class SizeDistribution {
  kUniform,    // j / grid, j in [1, grid]
  kClustered,  // 1/t + d / (grid t), d in [-spread, spread]
  kHeavyDust,  // heavy_percent% in [band, 1], the rest in (0, band)
  kSmall,      // band * j / grid, j in [1, grid]; all items <= band
};

std::string ToString(SizeDistribution d);
// Throws InvalidInput on unknown names.
SizeDistribution ParseDistribution(const std::string& name);

struct GeneratorSpec {
  int n = 10;
  int groups = 3;
  int64_t k_min = 1;
  int64_t k_max = 3;
  SizeDistribution distribution = SizeDistribution::kUniform;
  uint64_t seed = 1;
  int64_t grid = 100;
  int64_t t = 3;
  int64_t spread = 10;
  Rational band{1, 121};
  int heavy_percent = 30;
};

// Uniform integer in [lo, hi] by rejection sampling.
int64_t DrawInRange(std::mt19937_64& rng, int64_t lo, int64_t hi);

// Throws InvalidInput on an infeasible spec.
Instance GenerateInstance(const GeneratorSpec& spec);

}  // namespace bpp

#endif  // BPP_GENERATORS_H_
