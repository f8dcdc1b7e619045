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

#include "bpp/oracle.h"

#include <algorithm>
#include <chrono>
#include <map>

namespace bpp {

Packing FirstFitDecreasing(const Instance& inst) {
  std::vector<Rational> load;
  std::vector<std::map<int, int64_t>> count;
  std::vector<std::vector<int>> bins;
  for (int id = 1; id <= inst.n(); ++id) {
    const int g = inst.group_of(id);
    size_t b = 0;
    for (; b < bins.size(); ++b) {
      if (load[b] + inst.size(id) <= 1 && count[b][g] < inst.group(g).k) break;
    }
    if (b == bins.size()) {
      bins.emplace_back();
      load.emplace_back(0);
      count.emplace_back();
    }
    bins[b].push_back(id);
    load[b] += inst.size(id);
    ++count[b][g];
  }
  Packing p;
  for (auto& b : bins) p.bins.emplace_back(std::move(b));
  return p;
}

namespace {

// Sizes scaled to integers over a common denominator when it is small enough,
// exact rationals otherwise.
template <typename Num>
class BranchAndBound {
 public:
  BranchAndBound(const Instance& inst, std::vector<Num> size, Num capacity,
                 const OracleLimits& limits, int64_t lower)
      : inst_(inst), size_(std::move(size)), cap_(capacity), limits_(limits),
        lower_(lower), start_(std::chrono::steady_clock::now()) {
    const int n = inst.n();
    same_as_prev_.assign(n + 1, false);
    for (int id = 2; id <= n; ++id) {
      same_as_prev_[id] = inst.size(id) == inst.size(id - 1) &&
                          inst.group_of(id) == inst.group_of(id - 1);
    }
    where_.assign(n + 1, -1);
  }

  // Seeds the incumbent; returns false when the search hit a limit.
  bool Run(const Packing& incumbent) {
    best_ = incumbent.num_bins();
    best_assign_ = incumbent;
    if (best_ > lower_) Dfs(1);
    return !aborted_;
  }

  const Packing& best() const { return best_assign_; }
  int64_t nodes() const { return nodes_; }

 private:
  struct Bin {
    Num load;
    std::map<int, int64_t> count;
    std::vector<int> items;
  };

  bool OutOfBudget() {
    if (nodes_ >= limits_.node_limit) return true;
    if ((nodes_ & 1023) == 0) {
      std::chrono::duration<double> el = std::chrono::steady_clock::now() - start_;
      if (el.count() > limits_.time_limit_s) return true;
    }
    return false;
  }

  void Dfs(int id) {
    if (aborted_ || best_ <= lower_) return;
    ++nodes_;
    if (OutOfBudget()) {
      aborted_ = true;
      return;
    }
    if (id > inst_.n()) {
      if (static_cast<int64_t>(bins_.size()) < best_) {
        best_ = static_cast<int64_t>(bins_.size());
        best_assign_.bins.clear();
        for (const Bin& b : bins_) best_assign_.bins.emplace_back(b.items);
      }
      return;
    }
    // Remaining items need at least ceil((rest - free) / cap) further bins.
    Num free = Num(0);
    for (const Bin& b : bins_) free += cap_ - b.load;
    Num need = rest_[id] - free;
    int64_t extra = 0;
    if (need > 0) extra = CeilDiv(need);
    if (static_cast<int64_t>(bins_.size()) + extra >= best_) return;

    const int g = inst_.group_of(id);
    const Num& s = size_[id];
    const int first = same_as_prev_[id] ? where_[id - 1] : 0;
    for (int b = std::max(first, 0); b < static_cast<int>(bins_.size()); ++b) {
      {
        Bin& bin = bins_[b];
        if (bin.load + s > cap_ || bin.count[g] >= inst_.group(g).k) continue;
        if (SameAsEarlier(b, std::max(first, 0))) continue;
        bin.load += s;
        ++bin.count[g];
        bin.items.push_back(id);
      }
      where_[id] = b;
      Dfs(id + 1);
      // The recursion may grow bins_, so index again.
      Bin& bin = bins_[b];
      bin.items.pop_back();
      --bin.count[g];
      bin.load -= s;
      if (aborted_) return;
    }
    if (static_cast<int64_t>(bins_.size()) + 1 < best_) {
      bins_.push_back(Bin{s, {{g, 1}}, {id}});
      where_[id] = static_cast<int>(bins_.size()) - 1;
      Dfs(id + 1);
      bins_.pop_back();
    }
  }

  // True if a bin in [from, b) has exactly the same load and group counts.
  bool SameAsEarlier(int b, int from) {
    for (int a = from; a < b; ++a) {
      if (bins_[a].load != bins_[b].load) continue;
      if (Counts(bins_[a]) == Counts(bins_[b])) return true;
    }
    return false;
  }

  static std::map<int, int64_t> Counts(const Bin& b) {
    std::map<int, int64_t> m;
    for (const auto& [g, c] : b.count) {
      if (c) m[g] = c;
    }
    return m;
  }

  int64_t CeilDiv(const Num& x) const;

 public:
  std::vector<Num> rest_;  // rest_[id] = sum of sizes id..n

 private:
  const Instance& inst_;
  std::vector<Num> size_;
  Num cap_;
  OracleLimits limits_;
  int64_t lower_;
  std::chrono::steady_clock::time_point start_;
  std::vector<bool> same_as_prev_;
  std::vector<int> where_;
  std::vector<Bin> bins_;
  int64_t best_ = 0;
  Packing best_assign_;
  int64_t nodes_ = 0;
  bool aborted_ = false;
};

template <>
int64_t BranchAndBound<int64_t>::CeilDiv(const int64_t& x) const {
  return (x + cap_ - 1) / cap_;
}

template <>
int64_t BranchAndBound<Rational>::CeilDiv(const Rational& x) const {
  return Ceil(x / cap_).get_si();
}

template <typename Num>
OracleResult RunSearch(const Instance& inst, std::vector<Num> size, Num cap,
                       const OracleLimits& limits, OracleResult res) {
  BranchAndBound<Num> bb(inst, size, cap, limits, res.lower_bound);
  bb.rest_.assign(inst.n() + 2, Num(0));
  for (int id = inst.n(); id >= 1; --id) bb.rest_[id] = bb.rest_[id + 1] + size[id];
  const bool done = bb.Run(res.packing);
  res.packing = bb.best();
  res.bins = res.packing.num_bins();
  res.nodes = bb.nodes();
  res.status = done ? OracleStatus::kOptimal : OracleStatus::kCapExceeded;
  return res;
}

}  // namespace

OracleResult ExactOpt(const Instance& inst, const OracleLimits& limits) {
  OracleResult res;
  if (inst.empty()) return res;
  res.lower_bound = std::max<int64_t>(Ceil(inst.TotalSize()).get_si(),
                                      CardinalityBound(inst));
  if (limits.lower_bound) {
    res.lower_bound = std::max<int64_t>(res.lower_bound, Ceil(*limits.lower_bound).get_si());
  }
  res.packing = FirstFitDecreasing(inst);
  res.bins = res.packing.num_bins();

  BigInt lcm = 1;
  for (const Item& it : inst.items()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), it.size.get_den_mpz_t());
  }
  // n * lcm must stay well inside int64.
  if (lcm * (inst.n() + 1) < BigInt(1) << 60) {
    std::vector<int64_t> size(inst.n() + 1, 0);
    for (int id = 1; id <= inst.n(); ++id) {
      BigInt v = inst.size(id).get_num() * (lcm / inst.size(id).get_den());
      size[id] = v.get_si();
    }
    return RunSearch<int64_t>(inst, std::move(size), lcm.get_si(), limits, res);
  }
  std::vector<Rational> size(inst.n() + 1, Rational(0));
  for (int id = 1; id <= inst.n(); ++id) size[id] = inst.size(id);
  return RunSearch<Rational>(inst, std::move(size), Rational(1), limits, res);
}

}  // namespace bpp
