/*
 * Copyright 2026 The pi-telescope Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#ifndef PITEL_RATIONAL_HPP
#define PITEL_RATIONAL_HPP

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

#include "pitel/errors.hpp"

namespace pitel {

/// Arbitrary-precision integer (GMP-backed).
using BigInt = boost::multiprecision::mpz_int;

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator (GMP's canonical form, maintained by every arithmetic
/// operation). This is the exact currency of all term arithmetic.
using Rational = boost::multiprecision::mpq_rational;

/// num/den reduced to canonical form. Throws ZeroDivisor if den == 0.
Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses "a/b" or "a" (optional leading '-'). Result is canonical even if
/// the input is not in lowest terms. Throws DomainError on malformed input
/// and ZeroDivisor on a zero denominator.
Rational parse_rational(std::string_view s);

/// Canonical decimal form: "a/b", or just "a" when the denominator is 1.
std::string to_string(const Rational& r);

/// n! as an exact integer. Throws NegativeFactorial for n < 0.
BigInt factorial(long n);

/// Shifted factorial (x)_n:
///   n > 0 : x (x+1) ... (x+n-1)
///   n = 0 : 1
///   n < 0 : (-1)^|n| / ((1-x)(2-x)...(|n|-x))
/// The n < 0 branch throws ZeroDivisor when some factor k - x vanishes,
/// i.e. when x is an integer in [1, |n|].
Rational pochhammer(const Rational& x, long n);

}  // namespace pitel

#endif  // PITEL_RATIONAL_HPP
