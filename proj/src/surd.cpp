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
#include "pitel/surd.hpp"

#include <numeric>

namespace pitel {

namespace {

int basis_index(int d) {
  for (size_t i = 0; i < Surd::kBasis.size(); ++i)
    if (Surd::kBasis[i] == d) return static_cast<int>(i);
  throw UnsupportedRadicand("radicand " + std::to_string(d) +
                            " is not a squarefree divisor of 30");
}

// Bit length of the largest coefficient magnitude (numerator and
// denominator), used to size the guard budget in eval().
unsigned coeff_bits(const std::array<Rational, 8>& c) {
  unsigned bits = 1;
  for (const auto& q : c) {
    bits = std::max(bits, static_cast<unsigned>(msb(abs(numerator(q)) + 1)) + 1);
    bits = std::max(bits, static_cast<unsigned>(msb(denominator(q))) + 1);
  }
  return bits;
}

}  // namespace

Surd::Surd() { coeff_.fill(Rational(0)); }

Surd::Surd(const Rational& rational_part) {
  coeff_.fill(Rational(0));
  coeff_[0] = rational_part;
}

Surd Surd::term(const Rational& c, int d) {
  Surd s;
  s.coeff_[basis_index(d)] = c;
  return s;
}

Surd Surd::sqrt_of(long n) {
  if (n < 0) throw DomainError("sqrt of negative integer");
  if (n == 0) return Surd();
  // strip square factors
  long square_root_part = 1;
  long radicand = n;
  for (long f = 2; f * f <= radicand; ++f) {
    while (radicand % (f * f) == 0) {
      radicand /= f * f;
      square_root_part *= f;
    }
  }
  if (radicand > 30 || 30 % radicand != 0)
    throw UnsupportedRadicand("sqrt(" + std::to_string(n) +
                              ") has squarefree part " +
                              std::to_string(radicand) +
                              ", not a divisor of 30");
  return term(Rational(square_root_part), static_cast<int>(radicand));
}

const Rational& Surd::coefficient(int d) const {
  return coeff_[basis_index(d)];
}

Surd& Surd::operator+=(const Surd& rhs) {
  for (size_t i = 0; i < coeff_.size(); ++i) coeff_[i] += rhs.coeff_[i];
  return *this;
}

Surd& Surd::operator-=(const Surd& rhs) {
  for (size_t i = 0; i < coeff_.size(); ++i) coeff_[i] -= rhs.coeff_[i];
  return *this;
}

Surd& Surd::operator*=(const Surd& rhs) {
  std::array<Rational, 8> out;
  out.fill(Rational(0));
  for (size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] == 0) continue;
    for (size_t j = 0; j < rhs.coeff_.size(); ++j) {
      if (rhs.coeff_[j] == 0) continue;
      // sqrt(a) sqrt(b) = g sqrt(ab/g^2) with g = gcd(a, b); a, b squarefree
      const int a = kBasis[i], b = kBasis[j];
      const int g = std::gcd(a, b);
      const int d = (a / g) * (b / g);
      out[basis_index(d)] += coeff_[i] * rhs.coeff_[j] * g;
    }
  }
  coeff_ = std::move(out);
  return *this;
}

Surd& Surd::operator*=(const Rational& rhs) {
  for (auto& c : coeff_) c *= rhs;
  return *this;
}

Surd Surd::operator-() const {
  Surd out;
  for (size_t i = 0; i < coeff_.size(); ++i) out.coeff_[i] = -coeff_[i];
  return out;
}

namespace {

// Conjugation flipping the sign of sqrt(p): negate coefficients whose
// radicand is divisible by p.
Surd conjugate(const Surd& s, int p) {
  Surd out = s;
  for (int d : Surd::kBasis) {
    if (d % p == 0) {
      Surd t = Surd::term(s.coefficient(d), d);
      out -= t;
      out -= t;
    }
  }
  return out;
}

}  // namespace

Surd Surd::inverse() const {
  if (is_zero()) throw ZeroDivisor("inverse of zero surd");
  // Multiply by conjugates until the product is rational:
  //   s * c2(s) has no sqrt2 component, then clear sqrt3, then sqrt5.
  const Surd a = conjugate(*this, 2);
  const Surd s2 = *this * a;
  const Surd b = conjugate(s2, 3);
  const Surd s3 = s2 * b;
  const Surd c = conjugate(s3, 5);
  const Surd s4 = s3 * c;
  const Rational& norm = s4.rational_part();  // throws if not rational
  if (norm == 0) throw ZeroDivisor("inverse of zero surd");
  return a * b * c * (Rational(1) / norm);
}

Surd Surd::pow(unsigned e) const {
  Surd acc(Rational(1));
  for (unsigned i = 0; i < e; ++i) acc *= *this;
  return acc;
}

bool Surd::is_zero() const {
  for (const auto& c : coeff_)
    if (c != 0) return false;
  return true;
}

bool Surd::is_rational() const {
  for (size_t i = 1; i < coeff_.size(); ++i)
    if (coeff_[i] != 0) return false;
  return true;
}

const Rational& Surd::rational_part() const {
  if (!is_rational())
    throw DomainError("surd " + str() + " is not rational");
  return coeff_[0];
}

BigReal Surd::eval(unsigned precision_bits) const {
  const unsigned wp = precision_bits + 16 + coeff_bits(coeff_);
  BigReal acc(wp);
  for (size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] == 0) continue;
    if (kBasis[i] == 1) {
      acc += BigReal(coeff_[i], wp);
    } else {
      BigReal root = BigReal(static_cast<long>(kBasis[i]), wp).sqrt();
      root.mul_rational(coeff_[i]);
      acc += root;
    }
  }
  return acc.to_precision(precision_bits);
}

std::string Surd::str() const {
  std::string out;
  for (size_t i = 0; i < coeff_.size(); ++i) {
    if (coeff_[i] == 0) continue;
    Rational c = coeff_[i];
    if (out.empty()) {
      if (c < 0) {
        out += "-";
        c = -c;
      }
    } else {
      out += c < 0 ? " - " : " + ";
      if (c < 0) c = -c;
    }
    if (kBasis[i] == 1) {
      out += to_string(c);
    } else {
      if (c != 1) out += to_string(c) + "*";
      out += "sqrt(" + std::to_string(kBasis[i]) + ")";
    }
  }
  return out.empty() ? "0" : out;
}

std::optional<Surd> sin_pi_exact(const Rational& x) {
  if (!(x > 0 && x < 1))
    throw DomainError("sin_pi_exact: x = " + to_string(x) +
                      " outside (0, 1)");
  Rational xr = x;
  if (xr > Rational(1, 2)) xr = 1 - xr;  // sin(pi(1-x)) = sin(pi x)
  const BigInt num = numerator(xr);
  const BigInt den = denominator(xr);
  if (den == 1) return std::nullopt;  // cannot happen for x in (0,1)
  if (den == 2) return Surd(Rational(1));
  if (den == 3) return Surd::term(Rational(1, 2), 3);
  if (den == 4) return Surd::term(Rational(1, 2), 2);
  if (den == 6) return Surd(Rational(1, 2));
  if (den == 10 && num == 1)
    return Surd::term(Rational(1, 4), 5) - Surd(Rational(1, 4));
  if (den == 10 && num == 3)
    return Surd::term(Rational(1, 4), 5) + Surd(Rational(1, 4));
  if (den == 12 && num == 1)
    return Surd::term(Rational(1, 4), 6) - Surd::term(Rational(1, 4), 2);
  if (den == 12 && num == 5)
    return Surd::term(Rational(1, 4), 6) + Surd::term(Rational(1, 4), 2);
  return std::nullopt;
}

}  // namespace pitel
