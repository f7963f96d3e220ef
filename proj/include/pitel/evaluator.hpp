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
#ifndef PITEL_EVALUATOR_HPP
#define PITEL_EVALUATOR_HPP

#include <chrono>
#include <optional>

#include "pitel/bigreal.hpp"
#include "pitel/series.hpp"

namespace pitel {

enum class Method { direct, telescoped, richardson };
std::string method_name(Method m);

/// Result of one numeric evaluation against the series' limit target.
/// approximation and target are the value of the INFINITE SERIES (limit
/// minus boundary term), abs_error = |approximation - target| at the
/// working precision, and pass compares abs_error against the caller's
/// tolerance (against error_estimate when no tolerance was supplied).
struct EvalReport {
  SeriesParams params;
  Method method = Method::direct;
  long work = 0;  // terms summed (direct) or largest tau node (richardson)
  unsigned precision = 0;
  BigReal approximation, target, abs_error, error_estimate;
  bool pass = false;
  std::chrono::duration<double> wall_time{0};
};

/// Exact sum of terms k = 0..N, advanced with the incremental
/// prefactor-ratio recurrence.
Rational partial_sum_exact(const SeriesParams& params, long N);

/// tau_N - tau_{-1}, exact. By the telescoping identity this equals
/// partial_sum_exact(params, N); it is computed through a disjoint code
/// path (direct Pochhammer products) and serves as its oracle.
Rational telescoped_partial_sum(const SeriesParams& params, long N);

/// Floating summation of the first max_terms terms. The terms decay only
/// as O(1/k^2), so the truncation error is Theta(1/max_terms); the error
/// estimate is C/max_terms with C fitted over the last decade of terms
/// (max of |term| k^2, times a 1.3 safety factor). Throws
/// PrecisionExhausted when that estimate falls below what the requested
/// precision can resolve.
EvalReport sum_direct(const SeriesParams& params, unsigned precision_bits,
                      long max_terms,
                      const std::optional<BigReal>& tolerance = std::nullopt);

/// Richardson extrapolation of tau_n to its limit over the geometric node
/// schedule n = base * 2^t, t = 0..levels-1 (one O(n_max) recurrence sweep
/// serves every node). tau_n has an asymptotic expansion in integer powers
/// of 1/n, which the triangular scheme eliminates order by order; the
/// error estimate is the difference of the last two diagonal entries.
/// Returns the extrapolated series value (extrapolated tau minus boundary).
EvalReport richardson_limit(const SeriesParams& params, long base, int levels,
                            unsigned precision_bits,
                            const std::optional<BigReal>& tolerance =
                                std::nullopt);

/// Full identity check: Richardson approximation of the series against the
/// target from limit_value (exact surd path when available, numeric sine
/// fallback otherwise), pass iff within tolerance.
EvalReport verify_identity(const SeriesParams& params, unsigned precision_bits,
                           const BigReal& tolerance, long base = 16,
                           int levels = 9);

}  // namespace pitel

#endif  // PITEL_EVALUATOR_HPP
