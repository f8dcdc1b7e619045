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

// Data model for bin packing under a partition matroid: instances, bin
// configurations, packings, prototypes, fit relations and the parameter set.

#ifndef BPP_CORE_H_
#define BPP_CORE_H_

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bpp/rational.h"

namespace bpp {

// Raised when an algorithmic guarantee fails at runtime. These indicate bugs,
// not bad inputs, and carry the stage that detected them.
class ContractViolation : public std::runtime_error {
 public:
  ContractViolation(const std::string& stage, const std::string& what)
      : std::runtime_error("[" + stage + "] " + what), stage_(stage) {}
  const std::string& stage() const { return stage_; }

 private:
  std::string stage_;
};

class InvalidInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Item {
  int id = 0;          // 1..n, non-increasing size
  Rational size;
  int group = 0;       // index into Instance::groups()
  int64_t label = 0;   // id in the source description
};

struct Group {
  int64_t id = 0;
  int64_t k = 1;
  std::vector<int> members;  // ascending item ids
};

// Unvalidated description. A group may list explicit members; an item may
// name its group. Both are cross-checked.
struct RawItem {
  int64_t label = 0;
  Rational size;
  std::optional<int64_t> group;
};
struct RawGroup {
  int64_t id = 0;
  int64_t k = 1;
  std::vector<int64_t> members;
};
struct RawInstance {
  std::vector<RawItem> items;
  std::vector<RawGroup> groups;
};

class Instance {
 public:
  Instance() = default;

  int n() const { return static_cast<int>(items_.size()); }
  int num_groups() const { return static_cast<int>(groups_.size()); }
  bool empty() const { return items_.empty(); }

  const Item& item(int id) const { return items_.at(id - 1); }
  const Rational& size(int id) const { return items_[id - 1].size; }
  int group_of(int id) const { return items_[id - 1].group; }
  int64_t k_of_item(int id) const { return groups_[items_[id - 1].group].k; }
  const Group& group(int g) const { return groups_.at(g); }
  const std::vector<Item>& items() const { return items_; }
  const std::vector<Group>& groups() const { return groups_; }
  int GroupIndexById(int64_t group_id) const;  // -1 if absent

  Rational TotalSize() const;

 private:
  friend struct InstanceBuilder;
  std::vector<Item> items_;
  std::vector<Group> groups_;
};

struct ValidationResult {
  std::optional<Instance> instance;
  std::vector<std::string> errors;
};

// Sorts items by non-increasing size (stable in input order), assigns ids
// 1..n, orders groups by id and drops groups without members.
ValidationResult ValidateInstance(const RawInstance& raw);
// Throws InvalidInput listing every error.
Instance MakeInstance(const RawInstance& raw);

// Instance on a subset of items. Item labels become parent ids and groups
// keep their ids. Sizes and caps may be replaced (by parent id and group
// index); every replaced size must still lie in (0,1] and every cap be >= 1.
struct SubInstance {
  Instance inst;
  std::vector<int> parent;  // parent[child id - 1]
};
SubInstance Restrict(const Instance& inst, const std::vector<int>& ids,
                     const std::function<Rational(int)>& size = {},
                     const std::function<int64_t(int)>& cap = {});

// Canonical sorted item-id set.
struct Configuration {
  std::vector<int> items;
  Configuration() = default;
  explicit Configuration(std::vector<int> ids);
  auto operator<=>(const Configuration&) const = default;
  bool empty() const { return items.empty(); }
  int size() const { return static_cast<int>(items.size()); }
  bool Contains(int id) const;
};

std::string ToString(const Configuration& c);

struct Packing {
  std::vector<Configuration> bins;
  int num_bins() const { return static_cast<int>(bins.size()); }
};

// Sparse nonnegative vector over configurations. Zero entries are never
// stored.
using Prototype = std::map<Configuration, Rational>;
Rational Norm(const Prototype& p);
void AddTo(Prototype& p, const Configuration& c, const Rational& value);

Rational SizeOf(const Instance& inst, const std::vector<int>& ids);
Rational SizeOf(const Instance& inst, const Configuration& c);

// Throws InvalidInput on unknown ids.
bool IsConfiguration(const Instance& inst, const std::vector<int>& ids);
bool IsConfiguration(const Instance& inst, const Configuration& c);

// max_G ceil(|G| / k(G)); 0 for the empty instance.
int64_t CardinalityBound(const Instance& inst);
// Same bound restricted to a subset of items.
int64_t CardinalityBound(const Instance& inst, const std::vector<int>& ids);

std::vector<int> FitSlot(const Instance& inst, int id);
// min(eps^2, eps * (1 - s(C))).
Rational FitConfigThreshold(const Instance& inst, const Configuration& c,
                            const Rational& eps);
std::vector<int> FitConfig(const Instance& inst, const Configuration& c,
                           const Rational& eps);

// Empty list iff every bin is a configuration and bins are disjoint. With
// require_complete, every item must also be covered.
std::vector<std::string> ValidatePacking(const Instance& inst,
                                         const Packing& packing,
                                         bool require_complete);

// Integer constant that saturates instead of overflowing.
struct SatInt {
  bool unbounded = false;
  int64_t value = 0;
  static SatInt Of(int64_t v) { return SatInt{false, v}; }
  static SatInt Unbounded() { return SatInt{true, 0}; }
  // a <= this
  bool Admits(int64_t a) const { return unbounded || a <= value; }
  std::string ToString() const;
};

inline constexpr int64_t kSaturationLimit = 1'000'000'000'000'000LL;

// ceil(x) as SatInt.
SatInt Saturate(const Rational& x);

struct Overrides {
  std::optional<int64_t> alpha;
  std::optional<int64_t> upsilon;
  std::optional<int64_t> eta;
  std::optional<int64_t> kappa;
  std::optional<Rational> threshold;
  std::optional<int64_t> support_cap;
  bool any() const {
    return alpha || upsilon || eta || kappa || threshold || support_cap;
  }
};

// Parses "key=value" for the keys above; throws InvalidInput.
void ApplyOverride(Overrides& ov, const std::string& assignment);

struct ConstantSet {
  Rational epsilon;
  bool test_mode = false;
  long double K_log = 0;  // ln K = eps^-2 ln(1/eps)
  long double Q_log = 0;  // ln Q = eps^-17
  SatInt alpha;           // eps^-5
  SatInt upsilon;         // 3 eps^-2
  SatInt eta_cap;         // eps^-12; eta = min(|G|, eta_cap)
  SatInt config_size_cap; // eps^-10
  Overrides overrides;

  SatInt Eta(int num_groups) const;
  // eps^upsilon * norm unless overridden.
  Rational ClassThreshold(const Rational& norm) const;
  // min(eps^(-3w-5), num_groups) unless overridden.
  int64_t Kappa(int w, int num_groups) const;
  // ln of the support cap on good prototypes.
  long double SupportCapLog() const;
  bool Overridden() const { return overrides.any(); }
};

// Throws InvalidInput when eps is inadmissible: outside test mode eps must be
// 1/m with m >= 11; in test mode any eps in (0, 1/2) is accepted.
ConstantSet MakeConstants(const Rational& eps, const Overrides& ov = {},
                          bool test_mode = false);

}  // namespace bpp

#endif  // BPP_CORE_H_
