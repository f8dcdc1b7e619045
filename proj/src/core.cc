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

#include "bpp/core.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_map>

namespace bpp {

struct InstanceBuilder {
  static Instance Build(std::vector<Item> items, std::vector<Group> groups) {
    Instance inst;
    inst.items_ = std::move(items);
    inst.groups_ = std::move(groups);
    return inst;
  }
};

int Instance::GroupIndexById(int64_t group_id) const {
  for (int g = 0; g < num_groups(); ++g) {
    if (groups_[g].id == group_id) return g;
  }
  return -1;
}

Rational Instance::TotalSize() const {
  Rational total = 0;
  for (const Item& it : items_) total += it.size;
  return total;
}

ValidationResult ValidateInstance(const RawInstance& raw) {
  ValidationResult result;
  std::vector<std::string>& errors = result.errors;

  std::map<int64_t, int> group_pos;
  for (size_t g = 0; g < raw.groups.size(); ++g) {
    const RawGroup& rg = raw.groups[g];
    if (!group_pos.emplace(rg.id, static_cast<int>(g)).second) {
      errors.push_back("group " + std::to_string(rg.id) + ": duplicate id");
    }
    if (rg.k < 1) {
      errors.push_back("group " + std::to_string(rg.id) + ": k(G) < 1");
    }
  }

  std::map<int64_t, int> item_pos;
  for (size_t i = 0; i < raw.items.size(); ++i) {
    const RawItem& ri = raw.items[i];
    if (!item_pos.emplace(ri.label, static_cast<int>(i)).second) {
      errors.push_back("item " + std::to_string(ri.label) + ": duplicate id");
    }
    if (sgn(ri.size) <= 0 || ri.size > 1) {
      errors.push_back("item " + std::to_string(ri.label) +
                       ": size out of (0,1]");
    }
  }

  // Every way an item can be tied to a group, deduplicated.
  std::vector<std::set<int64_t>> memberships(raw.items.size());
  for (size_t i = 0; i < raw.items.size(); ++i) {
    const RawItem& ri = raw.items[i];
    if (!ri.group) continue;
    if (!group_pos.count(*ri.group)) {
      errors.push_back("item " + std::to_string(ri.label) + ": unknown group " +
                       std::to_string(*ri.group));
      continue;
    }
    memberships[i].insert(*ri.group);
  }
  for (const RawGroup& rg : raw.groups) {
    for (int64_t label : rg.members) {
      auto it = item_pos.find(label);
      if (it == item_pos.end()) {
        errors.push_back("group " + std::to_string(rg.id) +
                         ": unknown member " + std::to_string(label));
        continue;
      }
      memberships[it->second].insert(rg.id);
    }
  }
  for (size_t i = 0; i < raw.items.size(); ++i) {
    if (memberships[i].empty()) {
      errors.push_back("item " + std::to_string(raw.items[i].label) +
                       ": in no group (not a partition)");
    } else if (memberships[i].size() > 1) {
      errors.push_back("item " + std::to_string(raw.items[i].label) +
                       ": in two groups (not a partition)");
    }
  }
  if (!errors.empty()) return result;

  std::vector<int> order(raw.items.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return raw.items[a].size > raw.items[b].size;
  });

  // Groups with members, ascending by id.
  std::map<int64_t, int> group_index;
  std::vector<Group> groups;
  for (const auto& [gid, pos] : group_pos) {
    bool used = false;
    for (const auto& m : memberships) used = used || *m.begin() == gid;
    if (!used) continue;
    group_index[gid] = static_cast<int>(groups.size());
    groups.push_back(Group{gid, raw.groups[pos].k, {}});
  }

  std::vector<Item> items;
  items.reserve(order.size());
  for (size_t r = 0; r < order.size(); ++r) {
    const RawItem& ri = raw.items[order[r]];
    Item it;
    it.id = static_cast<int>(r) + 1;
    it.size = ri.size;
    it.group = group_index.at(*memberships[order[r]].begin());
    it.label = ri.label;
    groups[it.group].members.push_back(it.id);
    items.push_back(std::move(it));
  }
  result.instance = InstanceBuilder::Build(std::move(items), std::move(groups));
  return result;
}

Instance MakeInstance(const RawInstance& raw) {
  ValidationResult v = ValidateInstance(raw);
  if (!v.instance) {
    std::string msg = "invalid instance:";
    for (const std::string& e : v.errors) msg += "\n  " + e;
    throw InvalidInput(msg);
  }
  return std::move(*v.instance);
}

SubInstance Restrict(const Instance& inst, const std::vector<int>& ids,
                     const std::function<Rational(int)>& size,
                     const std::function<int64_t(int)>& cap) {
  RawInstance raw;
  std::set<int> used;
  for (int id : ids) {
    RawItem ri;
    ri.label = id;
    ri.size = size ? size(id) : inst.size(id);
    ri.group = inst.group(inst.group_of(id)).id;
    raw.items.push_back(std::move(ri));
    used.insert(inst.group_of(id));
  }
  for (int g : used) {
    raw.groups.push_back(RawGroup{inst.group(g).id, cap ? cap(g) : inst.group(g).k, {}});
  }
  SubInstance out;
  out.inst = MakeInstance(raw);
  for (const Item& it : out.inst.items()) out.parent.push_back(static_cast<int>(it.label));
  return out;
}

Configuration::Configuration(std::vector<int> ids) : items(std::move(ids)) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
}

bool Configuration::Contains(int id) const {
  return std::binary_search(items.begin(), items.end(), id);
}

std::string ToString(const Configuration& c) {
  std::string s = "{";
  for (size_t i = 0; i < c.items.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c.items[i]);
  }
  return s + "}";
}

Rational Norm(const Prototype& p) {
  Rational total = 0;
  for (const auto& [c, v] : p) total += v;
  return total;
}

void AddTo(Prototype& p, const Configuration& c, const Rational& value) {
  if (sgn(value) == 0) return;
  auto [it, inserted] = p.emplace(c, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) p.erase(it);
  }
}

namespace {

void CheckIds(const Instance& inst, const std::vector<int>& ids) {
  for (int id : ids) {
    if (id < 1 || id > inst.n()) {
      throw InvalidInput("unknown item id " + std::to_string(id));
    }
  }
}

}  // namespace

Rational SizeOf(const Instance& inst, const std::vector<int>& ids) {
  Rational total = 0;
  for (int id : ids) total += inst.size(id);
  return total;
}

Rational SizeOf(const Instance& inst, const Configuration& c) {
  return SizeOf(inst, c.items);
}

bool IsConfiguration(const Instance& inst, const std::vector<int>& ids) {
  CheckIds(inst, ids);
  if (SizeOf(inst, ids) > 1) return false;
  std::unordered_map<int, int64_t> count;
  for (int id : ids) {
    if (++count[inst.group_of(id)] > inst.k_of_item(id)) return false;
  }
  return true;
}

bool IsConfiguration(const Instance& inst, const Configuration& c) {
  return IsConfiguration(inst, c.items);
}

int64_t CardinalityBound(const Instance& inst) {
  int64_t v = 0;
  for (const Group& g : inst.groups()) {
    int64_t sz = static_cast<int64_t>(g.members.size());
    v = std::max(v, (sz + g.k - 1) / g.k);
  }
  return v;
}

int64_t CardinalityBound(const Instance& inst, const std::vector<int>& ids) {
  std::unordered_map<int, int64_t> count;
  for (int id : ids) ++count[inst.group_of(id)];
  int64_t v = 0;
  for (const auto& [g, c] : count) {
    int64_t k = inst.group(g).k;
    v = std::max(v, (c + k - 1) / k);
  }
  return v;
}

std::vector<int> FitSlot(const Instance& inst, int id) {
  CheckIds(inst, {id});
  std::vector<int> out;
  for (int other : inst.group(inst.group_of(id)).members) {
    if (inst.size(other) <= inst.size(id)) out.push_back(other);
  }
  return out;
}

Rational FitConfigThreshold(const Instance& inst, const Configuration& c,
                            const Rational& eps) {
  Rational a = eps * eps;
  Rational b = eps * (1 - SizeOf(inst, c));
  return a < b ? a : b;
}

std::vector<int> FitConfig(const Instance& inst, const Configuration& c,
                           const Rational& eps) {
  Rational t = FitConfigThreshold(inst, c, eps);
  std::vector<int> out;
  // Sizes are non-increasing in id, so the answer is a suffix.
  for (int id = inst.n(); id >= 1 && inst.size(id) <= t; --id) {
    out.push_back(id);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<std::string> ValidatePacking(const Instance& inst,
                                         const Packing& packing,
                                         bool require_complete) {
  std::vector<std::string> errors;
  std::vector<int> seen(inst.n() + 1, -1);
  for (int b = 0; b < packing.num_bins(); ++b) {
    const Configuration& bin = packing.bins[b];
    bool ids_ok = true;
    for (int id : bin.items) {
      if (id < 1 || id > inst.n()) {
        errors.push_back("bin " + std::to_string(b) + ": unknown item " +
                         std::to_string(id));
        ids_ok = false;
        continue;
      }
      if (seen[id] >= 0) {
        errors.push_back("item " + std::to_string(id) + " in bins " +
                         std::to_string(seen[id]) + " and " +
                         std::to_string(b));
      }
      seen[id] = b;
    }
    if (ids_ok && !IsConfiguration(inst, bin)) {
      errors.push_back("bin " + std::to_string(b) + " " + ToString(bin) +
                       " is not a configuration");
    }
  }
  if (require_complete) {
    for (int id = 1; id <= inst.n(); ++id) {
      if (seen[id] < 0) {
        errors.push_back("item " + std::to_string(id) + " not packed");
      }
    }
  }
  return errors;
}

std::string SatInt::ToString() const {
  return unbounded ? std::string("unbounded") : std::to_string(value);
}

SatInt Saturate(const Rational& x) {
  BigInt c = Ceil(x);
  if (c > kSaturationLimit) return SatInt::Unbounded();
  return SatInt::Of(c.get_si());
}

void ApplyOverride(Overrides& ov, const std::string& assignment) {
  size_t eq = assignment.find('=');
  if (eq == std::string::npos) {
    throw InvalidInput("override must be key=value: " + assignment);
  }
  std::string key = assignment.substr(0, eq);
  std::string value = assignment.substr(eq + 1);
  std::optional<Rational> r = ParseRational(value);
  if (!r) throw InvalidInput("override value is not a number: " + assignment);
  if (key == "threshold") {
    if (sgn(*r) <= 0) throw InvalidInput("threshold must be positive");
    ov.threshold = *r;
    return;
  }
  if (!IsInteger(*r) || sgn(*r) < 0 || r->get_num() > kSaturationLimit) {
    throw InvalidInput("override " + key + " must be a nonnegative integer");
  }
  int64_t v = r->get_num().get_si();
  if (key == "alpha") {
    if (v < 1) throw InvalidInput("alpha must be >= 1");
    ov.alpha = v;
  } else if (key == "upsilon") {
    ov.upsilon = v;
  } else if (key == "eta") {
    ov.eta = v;
  } else if (key == "kappa") {
    ov.kappa = v;
  } else if (key == "support_cap") {
    ov.support_cap = v;
  } else {
    throw InvalidInput("unknown override key: " + key);
  }
}

SatInt ConstantSet::Eta(int num_groups) const {
  if (overrides.eta) return SatInt::Of(*overrides.eta);
  if (eta_cap.Admits(num_groups)) return SatInt::Of(num_groups);
  return eta_cap;
}

Rational ConstantSet::ClassThreshold(const Rational& norm) const {
  if (overrides.threshold) return *overrides.threshold;
  return Pow(epsilon, upsilon.value) * norm;
}

int64_t ConstantSet::Kappa(int w, int num_groups) const {
  if (overrides.kappa) return std::min<int64_t>(*overrides.kappa, num_groups);
  // eps^(-3w-5) >= 2^(3w+5) > num_groups once 3w+5 >= 63.
  long e = 3L * w + 5;
  SatInt cap = Saturate(Pow(epsilon, -e));
  if (cap.Admits(num_groups)) return num_groups;
  return cap.value;
}

long double ConstantSet::SupportCapLog() const {
  if (overrides.support_cap) {
    return *overrides.support_cap == 0
               ? -1.0L
               : std::log(static_cast<long double>(*overrides.support_cap));
  }
  return Q_log;
}

ConstantSet MakeConstants(const Rational& eps, const Overrides& ov,
                          bool test_mode) {
  if (ov.any() && !test_mode) {
    throw InvalidInput("constant overrides require test mode");
  }
  if (test_mode) {
    if (sgn(eps) <= 0 || eps >= Rational(1, 2)) {
      throw InvalidInput("test-mode epsilon must lie in (0, 1/2)");
    }
  } else {
    if (eps.get_num() != 1 || eps.get_den() < 11) {
      throw InvalidInput(
          "epsilon must be 1/m with integer m >= 11 (use test mode otherwise)");
    }
  }
  ConstantSet c;
  c.epsilon = eps;
  c.test_mode = test_mode;
  c.overrides = ov;
  Rational inv = 1 / eps;
  Rational inv2 = inv * inv;
  long double ln_inv = Log(inv);
  c.K_log = static_cast<long double>(inv2.get_d()) * ln_inv;
  c.Q_log = std::pow(static_cast<long double>(inv.get_d()), 17.0L);
  c.alpha = ov.alpha ? SatInt::Of(*ov.alpha) : Saturate(Pow(inv, 5));
  c.upsilon = ov.upsilon ? SatInt::Of(*ov.upsilon) : Saturate(3 * inv2);
  c.eta_cap = Saturate(Pow(inv, 12));
  c.config_size_cap = Saturate(Pow(inv, 10));
  if (c.upsilon.unbounded) {
    throw InvalidInput("upsilon exceeds the saturation limit");
  }
  return c;
}

}  // namespace bpp
