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
#include "pitel/series.hpp"

#include <cassert>
#include <cstdlib>
#include <sstream>

#include "pitel/constants.hpp"

namespace pitel {

std::string family_name(Family f) { return f == Family::T1 ? "T1" : "T12"; }

std::optional<Family> family_from_name(const std::string& name) {
  if (name == "T1") return Family::T1;
  if (name == "T12") return Family::T12;
  return std::nullopt;
}

std::string SeriesParams::str() const {
  std::ostringstream os;
  os << family_name(family) << " m=" << m << " x=(";
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    os << (i ? "," : "") << to_string(x[i]);
  os << ") p=(";
  for (int i = 0; i < static_cast<int>(p.size()); ++i)
    os << (i ? "," : "") << p[i];
  os << ") q=(";
  for (int i = 0; i < static_cast<int>(q.size()); ++i)
    os << (i ? "," : "") << q[i];
  os << ") r=(";
  for (int i = 0; i < static_cast<int>(r.size()); ++i)
    os << (i ? "," : "") << r[i];
  os << ")";
  return os.str();
}

std::vector<std::string> validate(const SeriesParams& params) {
  std::vector<std::string> out;
  if (params.m < 1) {
    out.push_back("m must be >= 1");
    return out;
  }
  const size_t m = static_cast<size_t>(params.m);
  if (params.x.size() != m || params.p.size() != m || params.q.size() != m ||
      params.r.size() != m) {
    out.push_back("x, p, q, r must each have exactly m = " +
                  std::to_string(params.m) + " entries");
    return out;
  }
  for (size_t i = 0; i < m; ++i) {
    if (!(params.x[i] > 0 && params.x[i] < 1))
      out.push_back("x[" + std::to_string(i) + "] = " +
                    to_string(params.x[i]) +
                    " must lie in the open interval (0,1)");
  }
  for (size_t i = 0; i < m; ++i) {
    if (params.family == Family::T1) {
      // min{r_i, p_i+q_i-r_i+1} >= 0
      if (params.r[i] < 0)
        out.push_back("constraint min{r_i, p_i+q_i-r_i+1} >= 0 violated: r[" +
                      std::to_string(i) + "] = " +
                      std::to_string(params.r[i]) + " < 0");
      const long s = params.p[i] + params.q[i] - params.r[i] + 1;
      if (s < 0)
        out.push_back(
            "constraint min{r_i, p_i+q_i-r_i+1} >= 0 violated: p[" +
            std::to_string(i) + "]+q[" + std::to_string(i) + "]-r[" +
            std::to_string(i) + "]+1 = " + std::to_string(s) + " < 0");
    } else {
      // min{p_i, q_i} >= 0
      if (params.p[i] < 0)
        out.push_back("constraint min{p_i, q_i} >= 0 violated: p[" +
                      std::to_string(i) + "] = " +
                      std::to_string(params.p[i]) + " < 0");
      if (params.q[i] < 0)
        out.push_back("constraint min{p_i, q_i} >= 0 violated: q[" +
                      std::to_string(i) + "] = " +
                      std::to_string(params.q[i]) + " < 0");
    }
  }
  return out;
}

void require_valid(const SeriesParams& params) {
  auto violations = validate(params);
  if (violations.empty()) return;
  std::string msg = "invalid series parameters";
  for (const auto& v : violations) msg += "; " + v;
  throw DomainError(msg);
}

Rational tau(const SeriesParams& params, long k) {
  require_valid(params);
  if (k < 0) throw DomainError("tau requires k >= 0");
  Rational prod(1);
  for (int i = 0; i < params.m; ++i) {
    const Rational& x = params.x[i];
    const long p = params.p[i], q = params.q[i], r = params.r[i];
    if (params.family == Family::T1) {
      prod *= pochhammer(x, k + p + 1) * pochhammer(1 - x, k + q + 1);
      prod /= Rational(factorial(k + r) * factorial(k + p + q - r + 1));
    } else {
      prod *= Rational(factorial(k + p + 1) * factorial(k + q + 1));
      prod /= pochhammer(x, k + r + 1) * pochhammer(1 - x, k + p + q - r + 2);
    }
  }
  return prod;
}

Rational boundary_term(const SeriesParams& params) {
  require_valid(params);
  Rational prod(1);
  for (int i = 0; i < params.m; ++i) {
    const Rational& x = params.x[i];
    const long p = params.p[i], q = params.q[i], r = params.r[i];
    if (params.family == Family::T1) {
      const long s = p + q - r + 1;
      if (r == 0 || s == 0) return Rational(0);  // explicit vanishing factor
      prod *= pochhammer(x, p) * pochhammer(1 - x, q) * r * s;
      prod /= Rational(factorial(r) * factorial(s));
    } else {
      prod *= Rational(factorial(p) * factorial(q));
      prod /= pochhammer(x, r) * pochhammer(1 - x, p + q - r + 1);
    }
  }
  return prod;
}

Rational prefactor(const SeriesParams& params, long k) {
  require_valid(params);
  if (k < 0) throw DomainError("prefactor requires k >= 0");
  Rational prod(1);
  for (int i = 0; i < params.m; ++i) {
    const Rational& x = params.x[i];
    const long p = params.p[i], q = params.q[i], r = params.r[i];
    if (params.family == Family::T1) {
      prod *= pochhammer(x, k + p) * pochhammer(1 - x, k + q);
      prod /= Rational(factorial(k + r) * factorial(k + p + q - r + 1));
    } else {
      prod *= Rational(factorial(k + p) * factorial(k + q));
      prod /= pochhammer(x, k + r + 1) * pochhammer(1 - x, k + p + q - r + 2);
    }
  }
  return prod;
}

Rational bracket_value(const SeriesParams& params, long k) {
  Rational first(1), second(1);
  for (int i = 0; i < params.m; ++i) {
    const Rational& x = params.x[i];
    const long p = params.p[i], q = params.q[i], r = params.r[i];
    if (params.family == Family::T1) {
      first *= (x + (k + p)) * (Rational(k + q + 1) - x);
      second *= Rational(k + r) * Rational(k + p + q - r + 1);
    } else {
      first *= Rational(k + p + 1) * Rational(k + q + 1);
      second *= (x + (k + r)) * (Rational(k + p + q - r + 2) - x);
    }
  }
  return first - second;
}

Rational summand(const SeriesParams& params, long k) {
  return prefactor(params, k) * bracket_value(params, k);
}

Poly bracket_coefficients(const SeriesParams& params) {
  require_valid(params);
  const int n = 2 * params.m + 1;  // sample points for a degree <= 2m poly
  std::vector<Rational> points, values;
  points.reserve(n);
  values.reserve(n);
  for (int k = 0; k < n; ++k) {
    points.emplace_back(k);
    values.push_back(bracket_value(params, k));
  }
  Poly coeffs = poly_interpolate(points, values);
  coeffs.resize(static_cast<size_t>(n), Rational(0));
  if (coeffs[n - 1] != 0 || coeffs[n - 2] != 0)
    throw CancellationFailure(
        "bracket leading coefficients did not cancel for " + params.str());
  coeffs.resize(static_cast<size_t>(2 * params.m - 1));
  return coeffs;
}

BigReal LimitSpec::numeric(unsigned precision_bits) const {
  const unsigned wp = precision_bits + 32;
  BigReal value(wp);
  if (surd_factor.has_value()) {
    value = surd_factor->eval(wp);
  } else {
    value = BigReal(1, wp);
    for (const auto& xi : params.x) value *= sin_pi_numeric(xi, wp);
    if (params.family == Family::T12) value = BigReal(1, wp) / value;
  }
  value *= pi_reference(wp).pow_int(pi_exponent);
  return value.to_precision(precision_bits);
}

LimitSpec limit_value(const SeriesParams& params) {
  require_valid(params);
  LimitSpec spec;
  spec.params = params;
  spec.pi_exponent = params.family == Family::T1 ? -params.m : params.m;
  Surd prod(Rational(1));
  bool all_exact = true;
  for (const auto& xi : params.x) {
    auto s = sin_pi_exact(xi);
    if (!s.has_value()) {
      all_exact = false;
      break;
    }
    prod *= *s;
  }
  if (all_exact)
    spec.surd_factor =
        params.family == Family::T1 ? prod : prod.inverse();
  return spec;
}

long long StepRatio::max_abs(long max_k) const {
  constexpr long long kCap = 1LL << 62;
  __int128 worst = 0;
  auto consider = [&](const Lin& l, long k) {
    __int128 v = static_cast<__int128>(l.slope) * k + l.offset;
    if (v < 0) v = -v;
    if (v > worst) worst = v;
  };
  for (const auto& l : num) consider(l, 0), consider(l, max_k);
  for (const auto& l : den) consider(l, 0), consider(l, max_k);
  return worst > kCap ? kCap : static_cast<long long>(worst);
}

Rational StepRatio::value_at(long k) const {
  Rational v(1);
  for (const auto& l : num) v *= l.at(k);
  for (const auto& l : den) {
    const long long d = l.at(k);
    if (d == 0) throw ZeroDivisor("step ratio denominator vanished");
    v /= d;
  }
  return v;
}

namespace {

// The i64-scaled step factors cap the angle denominators and shifts; every
// printed identity is orders of magnitude below this, and the exact
// operations (tau, summand, ...) carry no such limit.
constexpr long long kStepLimit = 1'000'000;

long long to_ll(const BigInt& v) { return v.convert_to<long long>(); }

void check_step_sizes(const SeriesParams& params) {
  for (int i = 0; i < params.m; ++i) {
    if (denominator(params.x[i]) > kStepLimit ||
        std::abs(params.p[i]) > kStepLimit ||
        std::abs(params.q[i]) > kStepLimit ||
        std::abs(params.r[i]) > kStepLimit)
      throw DomainError(
          "step-ratio evaluation supports denominators and shifts up to 10^6");
  }
}

}  // namespace

StepRatio prefactor_step(const SeriesParams& params) {
  check_step_sizes(params);
  StepRatio ratio;
  for (int i = 0; i < params.m; ++i) {
    const long long a = to_ll(numerator(params.x[i]));
    const long long d = to_ll(denominator(params.x[i]));
    const long long p = params.p[i], q = params.q[i], r = params.r[i];
    if (params.family == Family::T1) {
      // (x+k+p)(1-x+k+q) / ((k+1+r)(k+p+q-r+2)), scaled by d in each part
      ratio.num.push_back({d, d * p + a});
      ratio.num.push_back({d, d * (q + 1) - a});
      ratio.den.push_back({d * d, d * d * (r + 1)});
      ratio.den.push_back({1, p + q - r + 2});
    } else {
      // (k+p+1)(k+q+1) / ((x+k+r+1)(1-x+k+p+q-r+2))
      ratio.num.push_back({d * d, d * d * (p + 1)});
      ratio.num.push_back({1, q + 1});
      ratio.den.push_back({d, d * (r + 1) + a});
      ratio.den.push_back({d, d * (p + q - r + 3) - a});
    }
  }
  return ratio;
}

StepRatio tau_step(const SeriesParams& params) {
  check_step_sizes(params);
  StepRatio ratio;
  for (int i = 0; i < params.m; ++i) {
    const long long a = to_ll(numerator(params.x[i]));
    const long long d = to_ll(denominator(params.x[i]));
    const long long p = params.p[i], q = params.q[i], r = params.r[i];
    if (params.family == Family::T1) {
      // tau_k / tau_{k-1} = (k+x+p)(k-x+q+1) / ((k+r)(k+p+q-r+1))
      ratio.num.push_back({d, d * p + a});
      ratio.num.push_back({d, d * (q + 1) - a});
      ratio.den.push_back({d * d, d * d * r});
      ratio.den.push_back({1, p + q - r + 1});
    } else {
      // tau_k / tau_{k-1} = (k+p+1)(k+q+1) / ((k+x+r)(k-x+p+q-r+2))
      ratio.num.push_back({d * d, d * d * (p + 1)});
      ratio.num.push_back({1, q + 1});
      ratio.den.push_back({d, d * r + a});
      ratio.den.push_back({d, d * (p + q - r + 2) - a});
    }
  }
  return ratio;
}

}  // namespace pitel
