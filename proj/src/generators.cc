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

#include "bpp/generators.h"

namespace bpp {

std::string ToString(SizeDistribution d) {
  switch (d) {
    case SizeDistribution::kUniform:
      return "uniform";
    case SizeDistribution::kClustered:
      return "clustered";
    case SizeDistribution::kHeavyDust:
      return "heavy-dust";
    case SizeDistribution::kSmall:
      return "small";
  }
  return "?";
}

SizeDistribution ParseDistribution(const std::string& name) {
  for (SizeDistribution d : {SizeDistribution::kUniform, SizeDistribution::kClustered,
                             SizeDistribution::kHeavyDust, SizeDistribution::kSmall}) {
    if (ToString(d) == name) return d;
  }
  throw InvalidInput("unknown size distribution \"" + name +
                     "\" (uniform, clustered, heavy-dust, small)");
}

int64_t DrawInRange(std::mt19937_64& rng, int64_t lo, int64_t hi) {
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<int64_t>(rng());
  const uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<int64_t>(x % span);
}

namespace {

Rational Frac(int64_t num, int64_t den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace

Instance GenerateInstance(const GeneratorSpec& spec) {
  if (spec.n < 0) throw InvalidInput("n must be >= 0");
  if (spec.groups < 1) throw InvalidInput("need at least one group");
  if (spec.k_min < 1 || spec.k_min > spec.k_max) throw InvalidInput("empty k range");
  if (spec.grid < 2) throw InvalidInput("grid must be >= 2");
  if (spec.distribution == SizeDistribution::kClustered &&
      (spec.t < 1 || spec.spread < 0 || spec.spread >= spec.grid)) {
    throw InvalidInput("clustered needs t >= 1 and 0 <= spread < grid");
  }
  if ((spec.distribution == SizeDistribution::kHeavyDust ||
       spec.distribution == SizeDistribution::kSmall) &&
      (sgn(spec.band) <= 0 || spec.band > 1)) {
    throw InvalidInput("band must lie in (0, 1]");
  }
  if (spec.heavy_percent < 0 || spec.heavy_percent > 100) {
    throw InvalidInput("heavy_percent must lie in [0, 100]");
  }
  std::mt19937_64 rng(spec.seed);
  RawInstance raw;
  for (int g = 0; g < spec.groups; ++g) {
    raw.groups.push_back(RawGroup{g + 1, DrawInRange(rng, spec.k_min, spec.k_max), {}});
  }
  const int64_t grid = spec.grid;
  for (int i = 0; i < spec.n; ++i) {
    Rational size;
    switch (spec.distribution) {
      case SizeDistribution::kUniform:
        size = Frac(DrawInRange(rng, 1, grid), grid);
        break;
      case SizeDistribution::kClustered: {
        int64_t d = DrawInRange(rng, -spec.spread, spec.spread);
        size = Frac(1, spec.t) + Frac(d, grid * spec.t);
        if (size > 1) size = 1;
        break;
      }
      case SizeDistribution::kHeavyDust:
        if (DrawInRange(rng, 1, 100) <= spec.heavy_percent) {
          size = spec.band + (1 - spec.band) * Frac(DrawInRange(rng, 0, grid), grid);
        } else {
          size = spec.band * Frac(DrawInRange(rng, 1, grid - 1), grid);
        }
        break;
      case SizeDistribution::kSmall:
        size = spec.band * Frac(DrawInRange(rng, 1, grid), grid);
        break;
    }
    const int g = static_cast<int>(DrawInRange(rng, 0, spec.groups - 1));
    raw.items.push_back(RawItem{i + 1, size, raw.groups[g].id});
  }
  return MakeInstance(raw);
}

}  // namespace bpp
