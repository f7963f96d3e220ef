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
#ifndef PITEL_BIGREAL_HPP
#define PITEL_BIGREAL_HPP

#include <mpfr.h>

#include <string>

#include "pitel/rational.hpp"

namespace pitel {

/// Precision-carrying real number backed by MPFR.
///
/// Every value states its working precision in bits. Primitive operations
/// are correctly rounded at the result's precision (error <= 0.5 ulp, well
/// inside the documented 4-ulp contract). Composite routines built on top of
/// BigReal (pi_reference, sin_pi_numeric, surd evaluation, the evaluators)
/// meet the contract by working at an explicitly budgeted number of guard
/// bits above the requested precision and rounding once at the end.
///
/// Binary operators produce a result at the larger of the two operand
/// precisions. Values are immutable in spirit: all mutation is through
/// assignment, and the class is safe to share across threads once built.
class BigReal {
 public:
  BigReal();  // 0 at 64 bits
  explicit BigReal(unsigned precision_bits);
  BigReal(const Rational& q, unsigned precision_bits);
  BigReal(long v, unsigned precision_bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  unsigned precision() const { return prec_; }
  /// Same value rounded to a (usually lower) precision.
  BigReal to_precision(unsigned precision_bits) const;

  /// 2^e, exact.
  static BigReal power_of_two(long e, unsigned precision_bits);

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);
  BigReal& mul_rational(const Rational& rhs);

  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
  friend BigReal operator*(BigReal a, long b) { return a *= b; }
  friend BigReal operator/(BigReal a, long b) { return a /= b; }
  BigReal operator-() const;

  BigReal abs() const;
  BigReal sqrt() const;           // DomainError on negative input
  BigReal root(unsigned n) const; // n-th root, n >= 1
  BigReal pow_int(long e) const;  // ZeroDivisor on 0^negative

  int sign() const;  // -1, 0, +1
  bool is_zero() const { return sign() == 0; }
  int compare(const BigReal& rhs) const;
  bool operator<(const BigReal& rhs) const { return compare(rhs) < 0; }
  bool operator<=(const BigReal& rhs) const { return compare(rhs) <= 0; }
  bool operator>(const BigReal& rhs) const { return compare(rhs) > 0; }
  bool operator>=(const BigReal& rhs) const { return compare(rhs) >= 0; }

  /// Base-2 exponent e with 2^(e-1) <= |value| < 2^e; LONG_MIN for zero.
  long exponent2() const;

  double to_double() const;

  /// Round-trip-stable decimal rendering with the given number of
  /// significant digits ("3.14159", "0.000123", "1.2345e-12").
  std::string to_decimal(size_t significant_digits) const;

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

 private:
  mpfr_t v_;
  unsigned prec_;
};

/// |a - b| at the larger operand precision.
BigReal abs_diff(const BigReal& a, const BigReal& b);

}  // namespace pitel

#endif  // PITEL_BIGREAL_HPP
