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

// Fractional grouping of slots: each important group is cut into classes of
// roughly equal frequency and every configuration is projected onto the
// smallest items of the classes it touches.

#ifndef BPP_SHIFT_H_
#define BPP_SHIFT_H_

#include <map>
#include <string>
#include <vector>

#include "bpp/core.h"

namespace bpp {

// Total frequency of the items in ids: sum over l, over C containing l, y_C.
Rational Frequency(const Prototype& y, const std::vector<int>& ids);

struct ImportantGroups {
  std::vector<int> significant;  // top eta groups by small-item frequency
  std::vector<int> massive;      // groups holding a large item
  std::vector<int> important;    // union, ascending group index
};

ImportantGroups FindImportantGroups(const Instance& inst, const Prototype& y,
                                    const ConstantSet& k);

struct ClassFamily {
  Rational threshold;
  ImportantGroups groups;
  // group index -> classes in order; class 1 holds the largest items.
  std::map<int, std::vector<std::vector<int>>> classes;
};

ClassFamily BuildClasses(const Instance& inst, const Prototype& y,
                         const ConstantSet& k);

// Class conditions: classes partition each important group with ids
// increasing from one class to the next, every class but the last reaches the
// threshold, no class exceeds threshold + 2, the next class fits the slots of
// the previous one, and the class count respects its cap. Empty iff all hold.
std::vector<std::string> CheckClasses(const Instance& inst, const Prototype& y,
                                      const ConstantSet& k,
                                      const ClassFamily& q);

// Union over classes F of the |C n F| largest ids of F; items outside
// important groups are dropped.
Configuration ProjectConfiguration(const Instance& inst, const Configuration& c,
                                   const ClassFamily& q);

struct ShiftResult {
  Prototype z;
  ClassFamily classes;
  int projected_support = 0;  // distinct P(C) over supp(y)
  bool polytope_nonempty = false;
};

// Asserts the input conditions, the projection properties, the norm bound
// (log scale) and, when check_polytope is set, nonemptiness of the output
// polytope.
ShiftResult Shift(const Instance& inst, const Prototype& y, const ConstantSet& k,
                  bool check_polytope = true);

// group, class index, id range, size, frequency; one row per class.
std::string DumpClassTable(const Instance& inst, const Prototype& y,
                           const ClassFamily& q);

}  // namespace bpp

#endif  // BPP_SHIFT_H_
