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

#ifndef BPP_RATIONAL_H_
#define BPP_RATIONAL_H_

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace bpp {

// Canonical exact rational (GMP keeps it reduced with a positive
// denominator after every operation).
using Rational = mpq_class;
using BigInt = mpz_class;

// Accepts "p/q", "p" and decimal notation such as "0.25" or "-1.5".
// Decimals are converted exactly. Returns nullopt on malformed input or a
// zero denominator.
std::optional<Rational> ParseRational(std::string_view text);

std::string ToString(const Rational& r);

BigInt Floor(const Rational& r);
BigInt Ceil(const Rational& r);
bool IsInteger(const Rational& r);

// base^exponent; exponent may be negative (base must then be nonzero).
Rational Pow(const Rational& base, long exponent);

// Natural logarithm of a positive rational, accurate for numbers far outside
// the double range.
long double Log(const Rational& r);
long double Log(const BigInt& z);

// x <= exp(log_bound), decided in log scale. Nonpositive x always passes.
bool LeqExp(const Rational& x, long double log_bound);

double ToDouble(const Rational& r);

}  // namespace bpp

#endif  // BPP_RATIONAL_H_
