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

#ifndef BPP_TESTS_HELPERS_H_
#define BPP_TESTS_HELPERS_H_

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "bpp/core.h"

namespace bpp::test {

inline Rational Q(const std::string& s) { return *ParseRational(s); }

inline Rational Frac(int64_t num, int64_t den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// items: (size, group id); groups: (id, k). Labels are 1..n in input order.
inline Instance Make(const std::vector<std::pair<std::string, int64_t>>& items,
                     const std::vector<std::pair<int64_t, int64_t>>& groups) {
  RawInstance raw;
  for (const auto& [id, k] : groups) raw.groups.push_back(RawGroup{id, k, {}});
  int64_t label = 0;
  for (const auto& [size, g] : items) raw.items.push_back(RawItem{++label, Q(size), g});
  return MakeInstance(raw);
}

// n items with sizes j/den, j in [lo, hi], spread over `groups` groups with
// caps in [1, kmax].
inline Instance Random(std::mt19937_64& rng, int n, int groups, int64_t kmax,
                       int64_t lo, int64_t hi, int64_t den) {
  RawInstance raw;
  for (int g = 1; g <= groups; ++g) {
    raw.groups.push_back(RawGroup{g, 1 + static_cast<int64_t>(rng() % kmax), {}});
  }
  for (int i = 1; i <= n; ++i) {
    int64_t j = lo + static_cast<int64_t>(rng() % (hi - lo + 1));
    raw.items.push_back(RawItem{i, Frac(j, den), 1 + static_cast<int64_t>(rng() % groups)});
  }
  return MakeInstance(raw);
}

inline Configuration C(std::vector<int> ids) { return Configuration(std::move(ids)); }

}  // namespace bpp::test

#endif  // BPP_TESTS_HELPERS_H_
