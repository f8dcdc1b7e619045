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

#include "bpp/rational.h"

#include <cctype>
#include <cmath>

namespace bpp {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::optional<Rational> ParseRational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  bool negative = false;
  if (text.front() == '-' || text.front() == '+') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational result;
  size_t slash = text.find('/');
  size_t dot = text.find('.');
  if (slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) return std::nullopt;
    BigInt d(std::string(den), 10);
    if (d == 0) return std::nullopt;
    result = Rational(BigInt(std::string(num), 10), d);
    result.canonicalize();
  } else if (dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return std::nullopt;
    if (!whole.empty() && !AllDigits(whole)) return std::nullopt;
    if (!frac.empty() && !AllDigits(frac)) return std::nullopt;
    std::string digits = std::string(whole) + std::string(frac);
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    result = Rational(BigInt(digits.empty() ? "0" : digits, 10), den);
    result.canonicalize();
  } else {
    if (!AllDigits(text)) return std::nullopt;
    result = Rational(BigInt(std::string(text), 10));
  }
  if (negative) result = -result;
  return result;
}

std::string ToString(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

BigInt Floor(const Rational& r) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

BigInt Ceil(const Rational& r) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

bool IsInteger(const Rational& r) { return r.get_den() == 1; }

Rational Pow(const Rational& base, long exponent) {
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  BigInt num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
  Rational r = exponent < 0 ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

long double Log(const BigInt& z) {
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, z.get_mpz_t());
  return std::log(static_cast<long double>(mant)) +
         static_cast<long double>(exp2) * std::log(2.0L);
}

long double Log(const Rational& r) { return Log(r.get_num()) - Log(r.get_den()); }

bool LeqExp(const Rational& x, long double log_bound) {
  if (sgn(x) <= 0) return true;
  return Log(x) <= log_bound;
}

double ToDouble(const Rational& r) { return r.get_d(); }

}  // namespace bpp
