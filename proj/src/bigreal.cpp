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
#include "pitel/bigreal.hpp"

#include <climits>
#include <cstdlib>

namespace pitel {

namespace {
constexpr unsigned kMinPrec = 2;  // MPFR's own floor

unsigned clamp_prec(unsigned p) { return p < kMinPrec ? kMinPrec : p; }
}  // namespace

BigReal::BigReal() : prec_(64) {
  mpfr_init2(v_, prec_);
  mpfr_set_zero(v_, +1);
}

BigReal::BigReal(unsigned precision_bits) : prec_(clamp_prec(precision_bits)) {
  mpfr_init2(v_, prec_);
  mpfr_set_zero(v_, +1);
}

BigReal::BigReal(const Rational& q, unsigned precision_bits)
    : prec_(clamp_prec(precision_bits)) {
  mpfr_init2(v_, prec_);
  mpfr_set_q(v_, q.backend().data(), MPFR_RNDN);
}

BigReal::BigReal(long v, unsigned precision_bits)
    : prec_(clamp_prec(precision_bits)) {
  mpfr_init2(v_, prec_);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) : prec_(other.prec_) {
  mpfr_init2(v_, prec_);
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept : prec_(other.prec_) {
  mpfr_init2(v_, kMinPrec);
  mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    if (prec_ != other.prec_) {
      mpfr_set_prec(v_, other.prec_);
      prec_ = other.prec_;
    }
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  if (this != &other) {
    mpfr_swap(v_, other.v_);
    std::swap(prec_, other.prec_);
  }
  return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

BigReal BigReal::to_precision(unsigned precision_bits) const {
  BigReal out(precision_bits);
  mpfr_set(out.v_, v_, MPFR_RNDN);
  return out;
}

BigReal BigReal::power_of_two(long e, unsigned precision_bits) {
  BigReal out(precision_bits);
  mpfr_set_ui_2exp(out.v_, 1, e, MPFR_RNDN);
  return out;
}

namespace {
// Widens the destination first so a binary op rounds at max(prec_a, prec_b).
void widen_to(mpfr_t v, unsigned& prec, unsigned target) {
  if (prec < target) {
    mpfr_prec_round(v, target, MPFR_RNDN);
    prec = target;
  }
}
}  // namespace

BigReal& BigReal::operator+=(const BigReal& rhs) {
  widen_to(v_, prec_, rhs.prec_);
  mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator-=(const BigReal& rhs) {
  widen_to(v_, prec_, rhs.prec_);
  mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(const BigReal& rhs) {
  widen_to(v_, prec_, rhs.prec_);
  mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(const BigReal& rhs) {
  if (rhs.is_zero()) throw ZeroDivisor("BigReal division by zero");
  widen_to(v_, prec_, rhs.prec_);
  mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::operator/=(long rhs) {
  if (rhs == 0) throw ZeroDivisor("BigReal division by zero");
  mpfr_div_si(v_, v_, rhs, MPFR_RNDN);
  return *this;
}

BigReal& BigReal::mul_rational(const Rational& rhs) {
  mpfr_mul_q(v_, v_, rhs.backend().data(), MPFR_RNDN);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal out(prec_);
  mpfr_neg(out.v_, v_, MPFR_RNDN);
  return out;
}

BigReal BigReal::abs() const {
  BigReal out(prec_);
  mpfr_abs(out.v_, v_, MPFR_RNDN);
  return out;
}

BigReal BigReal::sqrt() const {
  if (sign() < 0) throw DomainError("BigReal::sqrt of negative value");
  BigReal out(prec_);
  mpfr_sqrt(out.v_, v_, MPFR_RNDN);
  return out;
}

BigReal BigReal::root(unsigned n) const {
  if (n == 0) throw DomainError("BigReal::root with n = 0");
  if (n % 2 == 0 && sign() < 0)
    throw DomainError("BigReal::root: even root of negative value");
  BigReal out(prec_);
  mpfr_rootn_ui(out.v_, v_, n, MPFR_RNDN);
  return out;
}

BigReal BigReal::pow_int(long e) const {
  if (e < 0 && is_zero()) throw ZeroDivisor("BigReal: 0 to a negative power");
  BigReal out(prec_);
  mpfr_pow_si(out.v_, v_, e, MPFR_RNDN);
  return out;
}

int BigReal::sign() const { return mpfr_sgn(v_); }

int BigReal::compare(const BigReal& rhs) const { return mpfr_cmp(v_, rhs.v_); }

long BigReal::exponent2() const {
  if (mpfr_zero_p(v_)) return LONG_MIN;
  return static_cast<long>(mpfr_get_exp(v_));
}

double BigReal::to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

std::string BigReal::to_decimal(size_t significant_digits) const {
  if (significant_digits == 0) significant_digits = 1;
  if (mpfr_zero_p(v_)) return "0";
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, significant_digits, v_, MPFR_RNDN);
  std::string mant(raw);
  mpfr_free_str(raw);
  bool neg = !mant.empty() && mant[0] == '-';
  if (neg) mant.erase(0, 1);
  // value = 0.mant * 10^e
  std::string out;
  long exp = static_cast<long>(e);
  if (exp > 0 && static_cast<size_t>(exp) <= significant_digits) {
    out = mant.substr(0, exp);
    std::string frac = mant.substr(exp);
    if (!frac.empty()) out += "." + frac;
  } else if (exp <= 0 && exp > -5) {
    out = "0." + std::string(static_cast<size_t>(-exp), '0') + mant;
  } else {
    out = mant.substr(0, 1);
    if (mant.size() > 1) out += "." + mant.substr(1);
    out += "e" + std::to_string(exp - 1);
  }
  return neg ? "-" + out : out;
}

BigReal abs_diff(const BigReal& a, const BigReal& b) { return (a - b).abs(); }

}  // namespace pitel
