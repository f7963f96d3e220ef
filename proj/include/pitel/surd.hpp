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
#ifndef PITEL_SURD_HPP
#define PITEL_SURD_HPP

#include <array>
#include <optional>
#include <string>

#include "pitel/bigreal.hpp"
#include "pitel/rational.hpp"

namespace pitel {

/// Exact element of Q(sqrt2, sqrt3, sqrt5), stored as rational coefficients
/// over the basis { sqrt(d) : d squarefree divisor of 30 }. The basis is
/// multiplicatively closed (sqrt(a) sqrt(b) = gcd(a,b) sqrt(ab / gcd(a,b)^2))
/// and linearly independent over Q, so equality is coefficient-wise.
///
/// Square roots whose squarefree part is not a divisor of 30 are rejected at
/// construction with UnsupportedRadicand.
class Surd {
 public:
  static constexpr std::array<int, 8> kBasis{1, 2, 3, 5, 6, 10, 15, 30};

  Surd();  // zero
  Surd(const Rational& rational_part);  // NOLINT: implicit by design
  Surd(long v) : Surd(Rational(v)) {}   // NOLINT

  /// c * sqrt(d) for a basis radicand d.
  static Surd term(const Rational& c, int d);
  /// sqrt(n) for n >= 0, reducing square factors first (sqrt(8) = 2 sqrt2).
  static Surd sqrt_of(long n);

  const Rational& coefficient(int d) const;

  Surd& operator+=(const Surd& rhs);
  Surd& operator-=(const Surd& rhs);
  Surd& operator*=(const Surd& rhs);
  Surd& operator*=(const Rational& rhs);
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  friend Surd operator*(Surd a, const Rational& b) { return a *= b; }
  friend Surd operator*(const Rational& a, Surd b) { return b *= a; }
  Surd operator-() const;

  /// Exact multiplicative inverse, by clearing sqrt2, sqrt3, sqrt5 with the
  /// three field conjugations in turn. Throws ZeroDivisor on zero.
  Surd inverse() const;
  Surd pow(unsigned e) const;

  bool operator==(const Surd& rhs) const { return coeff_ == rhs.coeff_; }
  bool operator!=(const Surd& rhs) const { return !(*this == rhs); }
  bool is_zero() const;
  bool is_rational() const;  // only the d = 1 coefficient may be nonzero
  /// The d = 1 coefficient; DomainError if any radical coefficient is set.
  const Rational& rational_part() const;

  /// Numeric value: sum of coefficient(d) * sqrt(d). Works at prec plus a
  /// guard budget sized by the coefficient magnitudes, so the absolute error
  /// stays below 2^-(prec+8) * max_d |coefficient(d)| (and below 2^-(prec+8)
  /// for coefficients of modulus <= 1).
  BigReal eval(unsigned precision_bits) const;

  /// Debug/plain-text form, e.g. "1/4*sqrt(6) - 1/4*sqrt(2)".
  std::string str() const;

 private:
  std::array<Rational, 8> coeff_;  // indexed parallel to kBasis
};

/// Exact sin(pi x) for the quadratic-surd angles
///   x in {1/2, 1/3, 2/3, 1/4, 3/4, 1/6, 5/6, 1/10, 9/10, 3/10, 7/10,
///         1/12, 11/12, 5/12, 7/12},
/// using sin(pi(1-x)) = sin(pi x); nullopt for every other rational.
/// Throws DomainError for x outside (0, 1).
std::optional<Surd> sin_pi_exact(const Rational& x);

}  // namespace pitel

#endif  // PITEL_SURD_HPP
