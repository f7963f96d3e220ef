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
#include "pitel/constants.hpp"

namespace pitel {

namespace {

unsigned bit_length(unsigned long v) {
  unsigned n = 0;
  while (v > 0) {
    ++n;
    v >>= 1;
  }
  return n;
}

// atan(1/n) at working precision wp, truncated when the next term drops
// below 2^-(wp+2). Alternating series: the truncation error is bounded by
// the first omitted term.
BigReal atan_reciprocal(unsigned long n, unsigned wp) {
  BigReal power = BigReal(1, wp) / static_cast<long>(n);
  const unsigned long n2 = n * n;
  BigReal acc(wp);
  long cutoff = -static_cast<long>(wp) - 2;
  bool add = true;
  for (unsigned long j = 0;; ++j) {
    BigReal term = power / static_cast<long>(2 * j + 1);
    if (add)
      acc += term;
    else
      acc -= term;
    power /= static_cast<long>(n2);
    add = !add;
    if (power.is_zero() || power.exponent2() < cutoff) break;
  }
  return acc;
}

}  // namespace

BigReal pi_reference(unsigned precision_bits) {
  // Guard budget: 16 fixed bits plus log2 of the term count covers the
  // per-term rounding accumulation; truncation is bounded separately by the
  // alternating-series remainder.
  const unsigned wp = precision_bits + 16 + bit_length(precision_bits + 64);
  BigReal pi = atan_reciprocal(5, wp) * 16 - atan_reciprocal(239, wp) * 4;
  return pi.to_precision(precision_bits);
}

BigReal sin_pi_numeric(const Rational& x, unsigned precision_bits) {
  if (!(x > 0 && x < 1))
    throw DomainError("sin_pi_numeric: x = " + to_string(x) +
                      " outside (0, 1)");
  const unsigned wp = precision_bits + 16 + bit_length(precision_bits + 64);

  // Reduce to [0, 1/4]: first fold x > 1/2 onto 1 - x, then switch to the
  // cosine series around 1/2 when the argument is still above 1/4.
  Rational xr = x;
  if (xr > Rational(1, 2)) xr = 1 - xr;
  bool use_cos = xr > Rational(1, 4);
  if (use_cos) xr = Rational(1, 2) - xr;

  BigReal t = pi_reference(wp);
  t.mul_rational(xr);
  BigReal t2 = t * t;
  const long cutoff = -static_cast<long>(wp) - 2;

  BigReal acc(wp), term(wp);
  if (use_cos) {
    // cos(t) = sum (-1)^j t^(2j) / (2j)!
    term = BigReal(1, wp);
    acc = term;
    for (long j = 1;; ++j) {
      term *= t2;
      term /= (2 * j - 1) * (2 * j);
      if (j % 2 != 0)
        acc -= term;
      else
        acc += term;
      if (term.is_zero() || term.exponent2() < cutoff) break;
    }
  } else {
    // sin(t) = sum (-1)^j t^(2j+1) / (2j+1)!
    term = t;
    acc = term;
    if (t.is_zero()) return acc.to_precision(precision_bits);
    const long rel_cutoff = t.exponent2() + cutoff;
    for (long j = 1;; ++j) {
      term *= t2;
      term /= (2 * j) * (2 * j + 1);
      if (j % 2 != 0)
        acc -= term;
      else
        acc += term;
      if (term.is_zero() || term.exponent2() < rel_cutoff) break;
    }
  }
  return acc.to_precision(precision_bits);
}

}  // namespace pitel
