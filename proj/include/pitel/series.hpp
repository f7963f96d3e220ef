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
#ifndef PITEL_SERIES_HPP
#define PITEL_SERIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "pitel/poly.hpp"
#include "pitel/rational.hpp"
#include "pitel/surd.hpp"

namespace pitel {

/// The two telescoping series families.
///
/// T1 sums to prod_i sin(pi x_i) / pi^m. Its k-th term is
///
///   prod_i (x_i)_{k+p_i} (1-x_i)_{k+q_i} / ((k+r_i)! (k+p_i+q_i-r_i+1)!)
///   * { prod_i (k+x_i+p_i)(k-x_i+q_i+1) - prod_i (k+r_i)(k+p_i+q_i-r_i+1) }
///
/// and the telescoped sequence is
///   tau_k = prod_i (x_i)_{k+p_i+1} (1-x_i)_{k+q_i+1}
///           / ((k+r_i)! (k+p_i+q_i-r_i+1)!).
///
/// T12 sums to pi^m / prod_i sin(pi x_i). Its k-th term is
///
///   prod_i (k+p_i)! (k+q_i)! / ((x_i)_{k+r_i+1} (1-x_i)_{k+p_i+q_i-r_i+2})
///   * { prod_i (k+p_i+1)(k+q_i+1)
///       - prod_i (k+x_i+r_i)(k-x_i+p_i+q_i-r_i+2) }
///
/// with tau_k = prod_i (k+p_i+1)! (k+q_i+1)!
///              / ((x_i)_{k+r_i+1} (1-x_i)_{k+p_i+q_i-r_i+2}).
///
/// In both families sum_{k=0}^{N} term(k) = tau_N - tau_{-1} exactly, and
/// tau_N converges to the stated limit as N grows.
enum class Family { T1, T12 };

std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// One series instance: m angle parameters x_i in (0,1) and integer shifts
/// p_i, q_i, r_i. Constraints: T1 requires r_i >= 0 and
/// p_i + q_i - r_i + 1 >= 0; T12 requires p_i >= 0 and q_i >= 0 (r_i is
/// unconstrained; negative values are served by the negative-index shifted
/// factorial).
struct SeriesParams {
  Family family = Family::T1;
  int m = 0;
  std::vector<Rational> x;
  std::vector<long> p, q, r;

  bool operator==(const SeriesParams&) const = default;
  std::string str() const;
};

/// Empty vector means valid; otherwise one message per violated constraint,
/// each naming the constraint in the form the CLI echoes.
std::vector<std::string> validate(const SeriesParams& params);

/// Throws DomainError with the joined violation list if invalid.
void require_valid(const SeriesParams& params);

/// The telescoped sequence value tau_k, exact. k >= 0.
Rational tau(const SeriesParams& params, long k);

/// tau_{-1}, computed from the closed boundary formula (not the raw tau
/// definition, whose factorials are undefined at r_i = 0):
///   T1 : prod_i (x_i)_{p_i} (1-x_i)_{q_i} r_i (p_i+q_i-r_i+1)
///        / (r_i! (p_i+q_i-r_i+1)!)     [zero whenever some r_i = 0]
///   T12: prod_i p_i! q_i! / ((x_i)_{r_i} (1-x_i)_{p_i+q_i-r_i+1})
Rational boundary_term(const SeriesParams& params);

/// Product of shifted-factorial / factorial ratios in the k-th term (the
/// part without the brace difference), exact. k >= 0.
Rational prefactor(const SeriesParams& params, long k);

/// The brace difference of the k-th term, evaluated by its product form.
Rational bracket_value(const SeriesParams& params, long k);

/// prefactor(k) * bracket_value(k), exact.
Rational summand(const SeriesParams& params, long k);

/// Coefficients (ascending degree) of the bracket as a polynomial in k,
/// recovered by exact interpolation through k = 0..2m. The degree-2m and
/// degree-(2m-1) coefficients must vanish (that cancellation is what makes
/// the terms O(1/k^2)); if they do not, CancellationFailure is thrown. The
/// returned vector has 2m-1 entries, degrees 0..2m-2.
Poly bracket_coefficients(const SeriesParams& params);

/// The series limit: surd_factor * pi^pi_exponent when every sin(pi x_i)
/// is a quadratic surd (for T12 the surd is the inverted product), with a
/// numeric fallback that is always available.
struct LimitSpec {
  int pi_exponent = 0;
  std::optional<Surd> surd_factor;
  SeriesParams params;

  BigReal numeric(unsigned precision_bits) const;
};

LimitSpec limit_value(const SeriesParams& params);

/// Step ratios as products of integer linear factors in k, denominators
/// cleared. Evaluators advance prefactor(k) and tau_k in O(m) integer
/// multiplies per term instead of recomputing Pochhammer products.
struct StepRatio {
  struct Lin {
    long long slope = 0, offset = 0;
    long long at(long k) const { return slope * k + offset; }
  };
  std::vector<Lin> num, den;

  /// Largest |linear factor| over 0 <= k <= max_k (for overflow checks).
  long long max_abs(long max_k) const;
  Rational value_at(long k) const;  // exact; ZeroDivisor if a den factor is 0
};

/// ratio(k) = prefactor(k+1) / prefactor(k); valid for all k >= 0.
StepRatio prefactor_step(const SeriesParams& params);
/// ratio(k) = tau_k / tau_{k-1}; valid for all k >= 1.
StepRatio tau_step(const SeriesParams& params);

}  // namespace pitel

#endif  // PITEL_SERIES_HPP
