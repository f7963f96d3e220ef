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
#include "pitel/rational.hpp"

#include <cctype>

namespace pitel {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ZeroDivisor("rational with zero denominator");
  Rational r(num, den);  // the (num, den) constructor canonicalizes
  return r;
}

namespace {

bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view s) {
  auto slash = s.find('/');
  std::string_view num_s = s.substr(0, slash);
  if (!valid_integer_token(num_s))
    throw DomainError("malformed rational: '" + std::string(s) + "'");
  BigInt num{std::string(num_s)};
  if (slash == std::string_view::npos) return Rational(num);
  std::string_view den_s = s.substr(slash + 1);
  if (!valid_integer_token(den_s))
    throw DomainError("malformed rational: '" + std::string(s) + "'");
  BigInt den{std::string(den_s)};
  return make_rational(num, den);
}

std::string to_string(const Rational& r) { return r.str(); }

BigInt factorial(long n) {
  if (n < 0) throw NegativeFactorial("factorial of " + std::to_string(n));
  BigInt result;
  mpz_fac_ui(result.backend().data(), static_cast<unsigned long>(n));
  return result;
}

Rational pochhammer(const Rational& x, long n) {
  if (n == 0) return Rational(1);
  if (n > 0) {
    Rational prod(1);
    Rational term = x;
    for (long k = 0; k < n; ++k, term += 1) prod *= term;
    return prod;
  }
  // (x)_n = (-1)^|n| / prod_{k=1..|n|} (k - x)
  long nn = -n;
  Rational denom(1);
  for (long k = 1; k <= nn; ++k) {
    Rational f = Rational(k) - x;
    if (f == 0)
      throw ZeroDivisor("pochhammer: factor " + std::to_string(k) +
                        " - x vanishes for x = " + to_string(x));
    denom *= f;
  }
  Rational result = Rational(1) / denom;
  if (nn % 2 != 0) result = -result;
  return result;
}

}  // namespace pitel
