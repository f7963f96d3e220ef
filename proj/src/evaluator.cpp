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
#include "pitel/evaluator.hpp"

#include <vector>

namespace pitel {

std::string method_name(Method m) {
  switch (m) {
    case Method::direct:
      return "direct";
    case Method::telescoped:
      return "telescoped";
    case Method::richardson:
      return "richardson";
  }
  return "?";
}

namespace {

unsigned bit_length(unsigned long long v) {
  unsigned n = 0;
  while (v > 0) {
    ++n;
    v >>= 1;
  }
  return n;
}

// Applies a step ratio to a running BigReal with integer multiplies and
// divides; factors are paired when their products still fit in 63 bits.
class RatioApplier {
 public:
  RatioApplier(StepRatio ratio, long max_k) : ratio_(std::move(ratio)) {
    const long long worst = ratio_.max_abs(max_k);
    paired_ = worst < (1LL << 31) && ratio_.num.size() % 2 == 0 &&
              ratio_.den.size() % 2 == 0;
  }

  void apply(BigReal& v, long k) const {
    if (paired_) {
      for (size_t i = 0; i + 1 < ratio_.num.size(); i += 2)
        v *= ratio_.num[i].at(k) * ratio_.num[i + 1].at(k);
      for (size_t i = 0; i + 1 < ratio_.den.size(); i += 2)
        v /= ratio_.den[i].at(k) * ratio_.den[i + 1].at(k);
    } else {
      for (const auto& l : ratio_.num) v *= l.at(k);
      for (const auto& l : ratio_.den) v /= l.at(k);
    }
  }

 private:
  StepRatio ratio_;
  bool paired_ = false;
};

BigReal eval_poly(const std::vector<BigReal>& coeffs, long k) {
  BigReal acc = coeffs.back();
  for (size_t i = coeffs.size() - 1; i-- > 0;) {
    acc *= k;
    acc += coeffs[i];
  }
  return acc;
}

// The report's abs_error/pass cannot resolve estimates finer than an ulp at
// the stated precision.
void check_resolvable(const BigReal& estimate, const BigReal& approx,
                      unsigned precision_bits) {
  if (estimate.is_zero() || approx.is_zero()) return;
  if (estimate.exponent2() <
      approx.exponent2() - static_cast<long>(precision_bits) - 1)
    throw PrecisionExhausted(
        "error estimate is below one ulp of the result at " +
        std::to_string(precision_bits) + " bits");
}

void finish_report(EvalReport& rep, const BigReal& approx,
                   const BigReal& target, const BigReal& estimate,
                   unsigned precision_bits,
                   const std::optional<BigReal>& tolerance,
                   std::chrono::steady_clock::time_point t0) {
  rep.precision = precision_bits;
  rep.approximation = approx.to_precision(precision_bits);
  rep.target = target.to_precision(precision_bits);
  rep.abs_error = abs_diff(approx, target).to_precision(precision_bits);
  rep.error_estimate = estimate.to_precision(precision_bits);
  const BigReal& bound = tolerance.has_value() ? *tolerance : rep.error_estimate;
  rep.pass = rep.abs_error.compare(bound) <= 0;
  rep.wall_time = std::chrono::steady_clock::now() - t0;
}

}  // namespace

Rational partial_sum_exact(const SeriesParams& params, long N) {
  if (N < 0) throw DomainError("partial_sum_exact requires N >= 0");
  Rational pref = prefactor(params, 0);
  const StepRatio step = prefactor_step(params);
  Rational sum(0);
  for (long k = 0; k <= N; ++k) {
    sum += pref * bracket_value(params, k);
    if (k < N) pref *= step.value_at(k);
  }
  return sum;
}

Rational telescoped_partial_sum(const SeriesParams& params, long N) {
  if (N < 0) throw DomainError("telescoped_partial_sum requires N >= 0");
  return tau(params, N) - boundary_term(params);
}

EvalReport sum_direct(const SeriesParams& params, unsigned precision_bits,
                      long max_terms,
                      const std::optional<BigReal>& tolerance) {
  const auto t0 = std::chrono::steady_clock::now();
  require_valid(params);
  if (max_terms < 1) throw DomainError("sum_direct requires max_terms >= 1");

  const unsigned wp = precision_bits + 32 +
                      bit_length(static_cast<unsigned long long>(max_terms));
  const Poly bracket = bracket_coefficients(params);
  std::vector<BigReal> coeffs;
  coeffs.reserve(bracket.size());
  for (const auto& c : bracket) coeffs.emplace_back(c, wp);

  BigReal pref(prefactor(params, 0), wp);
  const RatioApplier step(prefactor_step(params), max_terms + 1);

  BigReal sum(wp);
  BigReal tail_coeff(wp);  // max of |term| k^2 over the last decade
  const long fit_start = std::max<long>(1, max_terms / 10);
  for (long k = 0; k < max_terms; ++k) {
    BigReal term = pref * eval_poly(coeffs, k);
    sum += term;
    if (k >= fit_start) {
      BigReal scaled = term.abs();
      scaled *= k;
      scaled *= k;
      if (tail_coeff.compare(scaled) < 0) tail_coeff = scaled;
    }
    if (k + 1 < max_terms) step.apply(pref, k);
  }

  BigReal estimate(wp);
  if (max_terms == 1) {
    estimate = sum.abs();  // single term: the tail is the same order
  } else {
    estimate = tail_coeff;
    estimate.mul_rational(Rational(13, 10));
    estimate /= max_terms;
  }

  const BigReal target =
      limit_value(params).numeric(wp) - BigReal(boundary_term(params), wp);
  check_resolvable(estimate, sum, precision_bits);

  EvalReport rep;
  rep.params = params;
  rep.method = Method::direct;
  rep.work = max_terms;
  finish_report(rep, sum, target, estimate, precision_bits, tolerance, t0);
  return rep;
}

EvalReport richardson_limit(const SeriesParams& params, long base, int levels,
                            unsigned precision_bits,
                            const std::optional<BigReal>& tolerance) {
  const auto t0 = std::chrono::steady_clock::now();
  require_valid(params);
  if (levels < 2) throw DomainError("richardson_limit requires levels >= 2");
  if (base < 4) throw DomainError("richardson_limit requires base >= 4");
  if (levels > 40) throw DomainError("richardson_limit: levels > 40");

  const long n_max = base << (levels - 1);
  const unsigned wp =
      precision_bits + 32 +
      bit_length(static_cast<unsigned long long>(levels) * base << levels);

  // One sweep of the tau recurrence serves all nodes base * 2^t.
  std::vector<BigReal> nodes;
  nodes.reserve(levels);
  const RatioApplier step(tau_step(params), n_max);
  BigReal t_val(tau(params, 0), wp);
  long next_node = base;
  for (long k = 1; k <= n_max; ++k) {
    step.apply(t_val, k);
    if (k == next_node) {
      nodes.push_back(t_val);
      next_node *= 2;
    }
  }

  // Neville tableau toward 1/n -> 0; node ratio 2 per level makes the
  // update T[t] += (T[t] - T[t-1]) / (2^j - 1).
  std::vector<BigReal>& tab = nodes;
  for (int j = 1; j < levels; ++j) {
    const long denom = (1L << j) - 1;
    for (int t = levels - 1; t >= j; --t) {
      BigReal diff = tab[t] - tab[t - 1];
      diff /= denom;
      tab[t] += diff;
    }
  }
  const BigReal estimate = abs_diff(tab[levels - 1], tab[levels - 2]);

  const BigReal boundary(boundary_term(params), wp);
  const BigReal approx = tab[levels - 1] - boundary;
  const BigReal target = limit_value(params).numeric(wp) - boundary;
  check_resolvable(estimate, approx, precision_bits);

  EvalReport rep;
  rep.params = params;
  rep.method = Method::richardson;
  rep.work = n_max;
  finish_report(rep, approx, target, estimate, precision_bits, tolerance, t0);
  return rep;
}

EvalReport verify_identity(const SeriesParams& params, unsigned precision_bits,
                           const BigReal& tolerance, long base, int levels) {
  return richardson_limit(params, base, levels, precision_bits, tolerance);
}

}  // namespace pitel
