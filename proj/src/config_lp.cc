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

#include "bpp/config_lp.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "bpp/exact_lp.h"

namespace bpp {
namespace {

struct Candidate {
  int id;
  int group;
  double w;
  double s;
  const Rational* wq;
  const Rational* sq;
};

// Depth-first branch and bound over items in density order. Floating point
// only steers the search; every prune is either safely conservative or
// re-decided in exact arithmetic. Once an item is left out, later items of
// the same group and size (never heavier, by the order) are left out too.
class KnapsackSearch {
 public:
  KnapsackSearch(const Instance& inst, const std::vector<Rational>& weights,
                 long node_limit = 0)
      : inst_(inst), count_(inst.num_groups(), 0), node_limit_(node_limit) {
    for (int id = 1; id <= inst.n(); ++id) {
      const Rational& w = weights[id - 1];
      if (sgn(w) <= 0) continue;
      cands_.push_back(Candidate{id, inst.group_of(id), w.get_d(),
                                 inst.size(id).get_d(), &w, &inst.size(id)});
    }
    std::stable_sort(cands_.begin(), cands_.end(),
                     [](const Candidate& a, const Candidate& b) {
                       return a.w * b.s > b.w * a.s;
                     });
    std::map<std::pair<int, Rational>, int> keys;
    for (const Candidate& c : cands_) {
      key_.push_back(keys.emplace(std::make_pair(c.group, *c.sq),
                                  static_cast<int>(keys.size())).first->second);
    }
    banned_.assign(keys.size(), 0);
  }

  // Best configuration of weight > floor, if any.
  PricingResult Run(const Rational& floor) {
    best_ = floor;
    best_d_ = floor.get_d();
    found_ = false;
    GreedyStart();
    size_d_ = 0;
    Dfs(0, 0.0);
    PricingResult res;
    if (found_) {
      res.config = Configuration(best_set_);
      res.value = best_;
    } else {
      res.value = 0;
    }
    res.nodes = nodes_;
    return res;
  }

 private:
  static double Tol(double x) { return 1e-9 * std::max(1.0, std::fabs(x)); }

  Rational ExactSize() const {
    Rational s = 0;
    for (size_t i : chosen_) s += *cands_[i].sq;
    return s;
  }

  Rational ExactWeight() const {
    Rational w = 0;
    for (size_t i : chosen_) w += *cands_[i].wq;
    return w;
  }

  // Whether candidate i still fits by size.
  bool Fits(size_t i) const {
    const double ns = size_d_ + cands_[i].s;
    if (ns > 1 + 1e-9) return false;
    if (ns < 1 - 1e-9) return true;
    return ExactSize() + *cands_[i].sq <= 1;
  }

  void Offer(double wd) {
    if (wd < best_d_ - Tol(best_d_)) return;
    Rational w = ExactWeight();
    if (w > best_) {
      best_ = w;
      best_d_ = best_.get_d();
      best_set_.clear();
      for (size_t i : chosen_) best_set_.push_back(cands_[i].id);
      found_ = true;
    }
  }

  void GreedyStart() {
    size_d_ = 0;
    chosen_.clear();
    double wd = 0;
    for (size_t i = 0; i < cands_.size(); ++i) {
      const Candidate& c = cands_[i];
      if (count_[c.group] >= inst_.group(c.group).k || !Fits(i)) continue;
      size_d_ += c.s;
      wd += c.w;
      ++count_[c.group];
      chosen_.push_back(i);
    }
    Offer(wd);
    for (size_t i : chosen_) --count_[cands_[i].group];
    chosen_.clear();
  }

  bool Open(size_t i) const {
    const Candidate& c = cands_[i];
    return count_[c.group] < inst_.group(c.group).k && !banned_[key_[i]];
  }

  double BoundD(size_t idx, double wd) const {
    double cap = 1.0 - size_d_;
    double b = wd;
    for (size_t i = idx; i < cands_.size(); ++i) {
      const Candidate& c = cands_[i];
      if (!Open(i)) continue;
      if (c.s <= cap) {
        cap -= c.s;
        b += c.w;
      } else {
        b += c.w * (std::max(cap, 0.0) / c.s);
        break;
      }
    }
    return b;
  }

  Rational BoundExact(size_t idx) const {
    Rational cap = 1 - ExactSize();
    Rational b = ExactWeight();
    for (size_t i = idx; i < cands_.size(); ++i) {
      const Candidate& c = cands_[i];
      if (!Open(i)) continue;
      if (*c.sq <= cap) {
        cap -= *c.sq;
        b += *c.wq;
      } else {
        b += *c.wq * cap / *c.sq;
        break;
      }
    }
    return b;
  }

  void Dfs(size_t idx, double wd) {
    ++nodes_;
    while (idx < cands_.size() && !Open(idx)) ++idx;
    if (idx == cands_.size()) return;
    if (node_limit_ > 0 && nodes_ > node_limit_) return;
    double bd = BoundD(idx, wd);
    if (bd < best_d_ - Tol(best_d_)) return;
    if (bd <= best_d_ + Tol(best_d_) && BoundExact(idx) <= best_) return;
    const Candidate& c = cands_[idx];
    if (Fits(idx)) {
      const double saved = size_d_;
      size_d_ += c.s;
      ++count_[c.group];
      chosen_.push_back(idx);
      Offer(wd + c.w);
      Dfs(idx + 1, wd + c.w);
      chosen_.pop_back();
      --count_[c.group];
      size_d_ = saved;
    }
    ++banned_[key_[idx]];
    Dfs(idx + 1, wd);
    --banned_[key_[idx]];
  }

  const Instance& inst_;
  std::vector<Candidate> cands_;
  std::vector<int> key_;     // (group, size) class per candidate
  std::vector<int> banned_;  // classes left out on the current path
  std::vector<int64_t> count_;
  std::vector<size_t> chosen_;  // candidate indices
  double size_d_ = 0;
  Rational best_;
  double best_d_ = 0;
  std::vector<int> best_set_;
  bool found_ = false;
  long nodes_ = 0;
  long node_limit_ = 0;
};

// Profit scaling with a group-nested dynamic program: state (scaled profit)
// -> minimum size, and inside a group (picks so far, scaled profit).
PricingResult Fptas(const Instance& inst, const std::vector<Rational>& weights,
                    const Rational& eps_prime) {
  std::vector<int> ids;
  Rational pmax = 0;
  for (int id = 1; id <= inst.n(); ++id) {
    if (sgn(weights[id - 1]) > 0) {
      ids.push_back(id);
      if (weights[id - 1] > pmax) pmax = weights[id - 1];
    }
  }
  PricingResult res;
  res.value = 0;
  if (ids.empty()) return res;
  Rational scale = eps_prime * pmax / static_cast<long>(ids.size());
  std::vector<long> profit(inst.n() + 1, 0);
  long total = 0;
  for (int id : ids) {
    profit[id] = Floor(weights[id - 1] / scale).get_si();
    total += profit[id];
  }
  const long P = total;
  // dp[p]: minimum size reaching scaled profit p; valid[p] marks reachability.
  std::vector<Rational> dp(P + 1);
  std::vector<char> valid(P + 1, 0);
  valid[0] = 1;

  struct GroupTrace {
    std::vector<int> items;
    int64_t cap;
    std::vector<int> choice;                  // picks used at profit p
    std::vector<std::vector<char>> take;      // [item][c * (P+1) + p]
  };
  std::vector<GroupTrace> traces;

  std::vector<std::vector<int>> by_group(inst.num_groups());
  for (int id : ids) by_group[inst.group_of(id)].push_back(id);
  for (int g = 0; g < inst.num_groups(); ++g) {
    if (by_group[g].empty()) continue;
    GroupTrace tr;
    tr.items = by_group[g];
    tr.cap = std::min<int64_t>(inst.group(g).k,
                               static_cast<int64_t>(tr.items.size()));
    const int K = static_cast<int>(tr.cap);
    std::vector<std::vector<Rational>> cur(K + 1, std::vector<Rational>(P + 1));
    std::vector<std::vector<char>> ok(K + 1, std::vector<char>(P + 1, 0));
    cur[0] = dp;
    ok[0] = valid;
    for (int id : tr.items) {
      std::vector<char> take((K + 1) * (P + 1), 0);
      const long pi = profit[id];
      const Rational& si = inst.size(id);
      for (int c = K; c >= 1; --c) {
        for (long p = P; p >= pi; --p) {
          if (!ok[c - 1][p - pi]) continue;
          Rational cand = cur[c - 1][p - pi] + si;
          if (cand > 1) continue;
          if (!ok[c][p] || cand < cur[c][p]) {
            cur[c][p] = std::move(cand);
            ok[c][p] = 1;
            take[c * (P + 1) + p] = 1;
          }
        }
      }
      tr.take.push_back(std::move(take));
    }
    tr.choice.assign(P + 1, -1);
    for (long p = 0; p <= P; ++p) {
      for (int c = 0; c <= K; ++c) {
        if (!ok[c][p]) continue;
        if (tr.choice[p] < 0 || cur[c][p] < dp[p]) {
          dp[p] = cur[c][p];
          tr.choice[p] = c;
        }
      }
      valid[p] = tr.choice[p] >= 0;
    }
    traces.push_back(std::move(tr));
  }

  long best_p = 0;
  for (long p = P; p >= 0; --p) {
    if (valid[p]) {
      best_p = p;
      break;
    }
  }
  std::vector<int> chosen;
  long p = best_p;
  for (auto t = traces.rbegin(); t != traces.rend(); ++t) {
    int c = t->choice[p];
    for (int i = static_cast<int>(t->items.size()) - 1; i >= 0 && c > 0; --i) {
      if (t->take[i][c * (P + 1) + p]) {
        chosen.push_back(t->items[i]);
        p -= profit[t->items[i]];
        --c;
      }
    }
  }
  res.config = Configuration(chosen);
  for (int id : res.config.items) res.value += weights[id - 1];
  return res;
}

}  // namespace

PricingResult PriceConfiguration(const Instance& inst,
                                 const std::vector<Rational>& weights,
                                 PricingMode mode, const Rational& eps_prime) {
  for (const Rational& w : weights) {
    if (sgn(w) < 0) throw InvalidInput("pricing weights must be nonnegative");
  }
  if (mode == PricingMode::kAuto) {
    mode = inst.n() <= kExactPricingLimit ? PricingMode::kExact
                                          : PricingMode::kFptas;
  }
  if (mode == PricingMode::kFptas) return Fptas(inst, weights, eps_prime);
  KnapsackSearch search(inst, weights);
  PricingResult r = search.Run(Rational(0));
  return r;
}

PricingResult PriceAboveFloor(const Instance& inst,
                              const std::vector<Rational>& weights,
                              const Rational& floor) {
  KnapsackSearch search(inst, weights);
  return search.Run(floor);
}

std::vector<Rational> Coverage(const Instance& inst, const Prototype& x) {
  std::vector<Rational> cov(inst.n());
  for (const auto& [c, v] : x) {
    for (int id : c.items) cov[id - 1] += v;
  }
  return cov;
}

Prototype NormalizeToEquality(const Instance& inst, const Prototype& x_ge) {
  Prototype x = x_ge;
  std::vector<Rational> cov = Coverage(inst, x);
  for (int id = 1; id <= inst.n(); ++id) {
    if (cov[id - 1] < 1) {
      throw InvalidInput("item " + std::to_string(id) + " is under-covered");
    }
  }
  for (int id = 1; id <= inst.n(); ++id) {
    Rational excess = cov[id - 1] - 1;
    if (sgn(excess) == 0) continue;
    std::vector<Configuration> holders;
    for (const auto& [c, v] : x) {
      if (c.Contains(id)) holders.push_back(c);
    }
    std::stable_sort(holders.begin(), holders.end(),
                     [](const Configuration& a, const Configuration& b) {
                       return a.size() < b.size();
                     });
    for (const Configuration& c : holders) {
      if (sgn(excess) == 0) break;
      Rational have = x.at(c);
      Rational t = have < excess ? have : excess;
      std::vector<int> rest;
      for (int j : c.items) {
        if (j != id) rest.push_back(j);
      }
      AddTo(x, c, -t);
      AddTo(x, Configuration(rest), t);
      excess -= t;
    }
  }
  return x;
}

namespace {

// Double-precision master used to grow the column pool and find a starting
// basis. Column-major tableau; columns 0..m-1 are the surplus variables of the
// covering rows, the pool follows. The singleton seed makes B = I at start.
class FloatMaster {
 public:
  explicit FloatMaster(int m) : m_(m), rhs_(m, 1.0), basic_(m) {
    for (int i = 0; i < m; ++i) {
      std::vector<double> col(m, 0.0);
      col[i] = -1.0;
      cols_.push_back(std::move(col));
      d_.push_back(1.0);
    }
    for (int i = 0; i < m; ++i) {
      std::vector<double> col(m, 0.0);
      col[i] = 1.0;
      cols_.push_back(std::move(col));
      d_.push_back(0.0);
      basic_[i] = m + i;
    }
  }

  // y_i is the reduced cost of surplus column i.
  std::vector<double> Duals() const {
    return std::vector<double>(d_.begin(), d_.begin() + m_);
  }

  void AddColumn(const Configuration& c) {
    std::vector<double> col(m_, 0.0);
    double dj = 1.0;
    for (int id : c.items) {
      const std::vector<double>& s = cols_[id - 1];
      for (int r = 0; r < m_; ++r) col[r] -= s[r];
      dj -= d_[id - 1];
    }
    cols_.push_back(std::move(col));
    d_.push_back(dj);
  }

  // Returns false when the pivot budget runs out.
  bool Iterate(long& budget) {
    bool bland = false;
    int degenerate = 0;
    for (;;) {
      int enter = -1;
      for (int j = 0; j < static_cast<int>(d_.size()); ++j) {
        if (d_[j] >= -kTol) continue;
        if (enter < 0) {
          enter = j;
          if (bland) break;
        } else if (d_[j] < d_[enter]) {
          enter = j;
        }
      }
      if (enter < 0) return true;
      if (--budget < 0) return false;
      const std::vector<double>& u = cols_[enter];
      int leave = -1;
      double best = 0;
      for (int r = 0; r < m_; ++r) {
        if (u[r] <= kTol) continue;
        double ratio = rhs_[r] / u[r];
        if (leave < 0 || ratio < best - kTol ||
            (ratio <= best + kTol && basic_[r] < basic_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      if (best <= kTol) {
        if (++degenerate >= kDegenerateLimit) bland = true;
      } else {
        degenerate = 0;
      }
      Pivot(leave, enter);
    }
  }

  const std::vector<int>& basic() const { return basic_; }
  int m() const { return m_; }
  long pivots() const { return pivots_; }

 private:
  static constexpr double kTol = 1e-9;
  static constexpr int kDegenerateLimit = 50;

  void Pivot(int r, int c) {
    ++pivots_;
    const std::vector<double> u = cols_[c];
    const double piv = u[r];
    const double dc = d_[c];
    for (size_t j = 0; j < cols_.size(); ++j) {
      std::vector<double>& col = cols_[j];
      double f = col[r];
      if (f == 0.0) continue;
      f /= piv;
      for (int i = 0; i < m_; ++i) col[i] -= u[i] * f;
      col[r] = f;
      d_[j] -= dc * f;
    }
    double f = rhs_[r] / piv;
    for (int i = 0; i < m_; ++i) rhs_[i] -= u[i] * f;
    rhs_[r] = f;
    d_[c] = 0.0;
    basic_[r] = c;
  }

  int m_;
  std::vector<std::vector<double>> cols_;
  std::vector<double> d_;
  std::vector<double> rhs_;
  std::vector<int> basic_;
  long pivots_ = 0;
};

// Exact revised simplex on the covering master with an explicit dense B^-1.
// Column codes: surplus i is i, pool column p is m + p.
class ExactMaster {
 public:
  ExactMaster(int m, std::vector<Configuration>* pool)
      : m_(m), pool_(pool), basic_(m), binv_(m, std::vector<Rational>(m)),
        xb_(m) {}

  // Tries the given basis; falls back to the singleton basis if it is
  // singular or primal infeasible in exact arithmetic.
  void Start(const std::vector<int>& basis) {
    if (!TryBasis(basis)) {
      std::vector<int> identity(m_);
      for (int i = 0; i < m_; ++i) identity[i] = m_ + i;
      TryBasis(identity);
    }
  }

  std::vector<Rational> Duals() const {
    std::vector<Rational> y(m_);
    for (int r = 0; r < m_; ++r) {
      if (basic_[r] < m_) continue;
      for (int j = 0; j < m_; ++j) {
        if (sgn(binv_[r][j]) != 0) y[j] += binv_[r][j];
      }
    }
    return y;
  }

  void Iterate() {
    bool bland = false;
    int degenerate = 0;
    for (;;) {
      std::vector<Rational> y = Duals();
      std::vector<char> in_basis(m_ + pool_->size(), 0);
      for (int b : basic_) in_basis[b] = 1;
      int enter = -1;
      Rational best_d;
      for (int code = 0; code < static_cast<int>(in_basis.size()); ++code) {
        if (in_basis[code]) continue;
        Rational dj;
        if (code < m_) {
          dj = y[code];
        } else {
          dj = 1;
          for (int id : (*pool_)[code - m_].items) dj -= y[id - 1];
        }
        if (sgn(dj) >= 0) continue;
        if (enter < 0 || dj < best_d) {
          enter = code;
          best_d = dj;
          if (bland) break;
        }
      }
      if (enter < 0) return;
      std::vector<Rational> u = Column(enter);
      int leave = -1;
      Rational best;
      for (int r = 0; r < m_; ++r) {
        if (sgn(u[r]) <= 0) continue;
        Rational ratio = xb_[r] / u[r];
        if (leave < 0 || ratio < best ||
            (ratio == best && basic_[r] < basic_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (leave < 0) throw ContractViolation("config_lp", "master LP unbounded");
      if (sgn(best) == 0) {
        if (++degenerate >= kDegenerateLimit) bland = true;
      } else {
        degenerate = 0;
      }
      Pivot(leave, enter, u);
    }
  }

  std::vector<Rational> Values() const {
    std::vector<Rational> x(pool_->size());
    for (int r = 0; r < m_; ++r) {
      if (basic_[r] >= m_) x[basic_[r] - m_] = xb_[r];
    }
    return x;
  }

  long pivots() const { return pivots_; }

 private:
  static constexpr int kDegenerateLimit = 50;

  std::vector<Rational> Column(int code) const {
    std::vector<Rational> u(m_);
    if (code < m_) {
      for (int r = 0; r < m_; ++r) u[r] = -binv_[r][code];
      return u;
    }
    for (int id : (*pool_)[code - m_].items) {
      for (int r = 0; r < m_; ++r) {
        if (sgn(binv_[r][id - 1]) != 0) u[r] += binv_[r][id - 1];
      }
    }
    return u;
  }

  void Pivot(int r, int code, const std::vector<Rational>& u) {
    ++pivots_;
    const Rational inv = 1 / u[r];
    for (Rational& v : binv_[r]) {
      if (sgn(v) != 0) v *= inv;
    }
    xb_[r] *= inv;
    for (int i = 0; i < m_; ++i) {
      if (i == r || sgn(u[i]) == 0) continue;
      for (int j = 0; j < m_; ++j) {
        if (sgn(binv_[r][j]) != 0) binv_[i][j] -= u[i] * binv_[r][j];
      }
      xb_[i] -= u[i] * xb_[r];
    }
    basic_[r] = code;
  }

  // Gauss-Jordan on [B | I].
  bool TryBasis(const std::vector<int>& basis) {
    std::vector<std::vector<Rational>> a(m_, std::vector<Rational>(m_));
    for (int c = 0; c < m_; ++c) {
      int code = basis[c];
      if (code < m_) {
        a[code][c] = -1;
      } else {
        for (int id : (*pool_)[code - m_].items) a[id - 1][c] = 1;
      }
    }
    std::vector<std::vector<Rational>> inv(m_, std::vector<Rational>(m_));
    for (int i = 0; i < m_; ++i) inv[i][i] = 1;
    for (int c = 0; c < m_; ++c) {
      int p = -1;
      for (int r = c; r < m_; ++r) {
        if (sgn(a[r][c]) != 0) {
          p = r;
          break;
        }
      }
      if (p < 0) return false;
      std::swap(a[p], a[c]);
      std::swap(inv[p], inv[c]);
      const Rational pinv = 1 / a[c][c];
      for (int j = 0; j < m_; ++j) {
        if (sgn(a[c][j]) != 0) a[c][j] *= pinv;
        if (sgn(inv[c][j]) != 0) inv[c][j] *= pinv;
      }
      for (int r = 0; r < m_; ++r) {
        if (r == c || sgn(a[r][c]) == 0) continue;
        const Rational f = a[r][c];
        for (int j = 0; j < m_; ++j) {
          if (sgn(a[c][j]) != 0) a[r][j] -= f * a[c][j];
          if (sgn(inv[c][j]) != 0) inv[r][j] -= f * inv[c][j];
        }
      }
    }
    // Row c of inv now belongs to the basic variable of column c.
    std::vector<Rational> xb(m_);
    for (int r = 0; r < m_; ++r) {
      for (int j = 0; j < m_; ++j) xb[r] += inv[r][j];
      if (sgn(xb[r]) < 0) return false;
    }
    basic_ = basis;
    binv_ = std::move(inv);
    xb_ = std::move(xb);
    return true;
  }

  int m_;
  std::vector<Configuration>* pool_;
  std::vector<int> basic_;
  std::vector<std::vector<Rational>> binv_;
  std::vector<Rational> xb_;
  long pivots_ = 0;
};

// Node budget for each floating-point pricing call; the exact stage decides
// optimality, so an incomplete search here only costs warm-start quality.
constexpr long kFloatPricingNodes = 200000;

}  // namespace

ConfigLpResult SolveConfigurationLp(const Instance& inst, const Rational& eps,
                                    PricingMode mode) {
  ConfigLpResult out;
  if (inst.empty()) {
    out.master_value = 0;
    return out;
  }
  if (mode == PricingMode::kAuto) {
    mode = inst.n() <= kExactPricingLimit ? PricingMode::kExact
                                          : PricingMode::kFptas;
  }
  out.exact_pricing = mode == PricingMode::kExact;
  const Rational eps_prime = eps / 2;
  const int m = inst.n();

  std::vector<Configuration> pool;
  std::set<Configuration> seen;
  for (int id = 1; id <= m; ++id) {
    pool.push_back(Configuration({id}));
    seen.insert(pool.back());
  }

  // Warm start in floating point.
  FloatMaster fm(m);
  long budget = 200L * m + 2000;
  const Rational float_floor(1 + 1e-9);
  while (fm.Iterate(budget)) {
    std::vector<double> yd = fm.Duals();
    std::vector<Rational> yq(m);
    for (int i = 0; i < m; ++i) yq[i] = yd[i] > 0 ? Rational(yd[i]) : Rational(0);
    KnapsackSearch search(inst, yq, kFloatPricingNodes);
    PricingResult priced = search.Run(float_floor);
    if (priced.config.empty() || !seen.insert(priced.config).second) break;
    pool.push_back(priced.config);
    fm.AddColumn(priced.config);
    ++out.iterations;
  }
  out.float_pivots = fm.pivots();
  // Float column indices coincide with the exact column codes.
  const std::vector<int>& start = fm.basic();

  ExactMaster master(m, &pool);
  master.Start(start);
  for (;;) {
    master.Iterate();
    ++out.iterations;
    std::vector<Rational> y = master.Duals();
    for (const Rational& v : y) {
      if (sgn(v) < 0) throw ContractViolation("config_lp", "negative dual");
    }
    PricingResult priced =
        mode == PricingMode::kExact
            ? PriceAboveFloor(inst, y, Rational(1))
            : PriceConfiguration(inst, y, PricingMode::kFptas, eps_prime);
    if (priced.value <= 1) break;
    if (!seen.insert(priced.config).second) {
      throw ContractViolation("config_lp",
                              "priced column is already in the optimal master");
    }
    pool.push_back(priced.config);
  }
  std::vector<Rational> vals = master.Values();
  Prototype x_ge;
  Rational objective = 0;
  for (size_t p = 0; p < vals.size(); ++p) {
    AddTo(x_ge, pool[p], vals[p]);
    objective += vals[p];
  }
  out.master_value = objective;
  out.columns = static_cast<int>(pool.size());
  out.pivots = master.pivots();
  out.x = NormalizeToEquality(inst, x_ge);
  if (Norm(out.x) != out.master_value) {
    throw ContractViolation("config_lp", "normalization changed the norm");
  }
  for (const auto& [c, v] : out.x) {
    if (!IsConfiguration(inst, c)) {
      throw ContractViolation("config_lp", "support entry is not a configuration");
    }
  }
  return out;
}

}  // namespace bpp
