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
#ifndef PITEL_CONSTANTS_HPP
#define PITEL_CONSTANTS_HPP

#include "pitel/bigreal.hpp"
#include "pitel/rational.hpp"

namespace pitel {

/// pi to at least `precision_bits` correct bits, computed with the Machin
/// arctangent formula pi/4 = 4 atan(1/5) - atan(1/239). The alternating
/// series gives a rigorous truncation bound (first omitted term); together
/// with the guard-bit budget the total error stays below 2^-(precision+8).
///
/// This is the project's independent reference for pi: it shares no code
/// path or algorithm with the telescoping series evaluators it is used to
/// check.
BigReal pi_reference(unsigned precision_bits);

/// sin(pi x) for rational x in the open interval (0, 1), via Taylor series
/// after symmetry reduction of the argument to [0, 1/4] (sin(pi(1-x)) =
/// sin(pi x), sin(pi x) = cos(pi(1/2 - x))). pi comes from pi_reference.
/// Throws DomainError for x outside (0, 1).
BigReal sin_pi_numeric(const Rational& x, unsigned precision_bits);

}  // namespace pitel

#endif  // PITEL_CONSTANTS_HPP
