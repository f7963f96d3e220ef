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
#ifndef PITEL_ERRORS_HPP
#define PITEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pitel {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A factor that must be nonzero vanished (rational division, shifted
/// factorial with negative index at an integer point, surd inversion of 0).
class ZeroDivisor : public Error {
 public:
  using Error::Error;
};

/// factorial(n) with n < 0.
class NegativeFactorial : public Error {
 public:
  using Error::Error;
};

/// Argument outside the documented domain (e.g. sin(pi x) with x not in (0,1)).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A square root whose squarefree part is not a divisor of 30.
class UnsupportedRadicand : public Error {
 public:
  using Error::Error;
};

/// The two leading bracket coefficients did not vanish; this indicates an
/// implementation bug, never bad user input.
class CancellationFailure : public Error {
 public:
  using Error::Error;
};

/// The requested accuracy cannot be resolved at the stated precision.
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

}  // namespace pitel

#endif  // PITEL_ERRORS_HPP
