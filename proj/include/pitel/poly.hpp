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
#ifndef PITEL_POLY_HPP
#define PITEL_POLY_HPP

#include <cstddef>
#include <vector>

#include "pitel/rational.hpp"

namespace pitel {

/// Dense polynomial with exact rational coefficients, ascending degree.
/// An empty vector is the zero polynomial.
using Poly = std::vector<Rational>;

inline Poly poly_trim(Poly p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return poly_trim(std::move(out));
}

inline Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  return poly_trim(std::move(out));
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return poly_trim(std::move(out));
}

inline Poly poly_scale(Poly p, const Rational& c) {
  for (auto& x : p) x *= c;
  return poly_trim(std::move(p));
}

/// Horner evaluation at a rational point.
inline Rational poly_eval(const Poly& p, const Rational& at) {
  Rational acc(0);
  for (size_t i = p.size(); i-- > 0;) acc = acc * at + p[i];
  return acc;
}

/// Unique interpolating polynomial through (points[i], values[i]), exact.
/// Points must be pairwise distinct. Newton divided differences expanded to
/// the monomial basis.
inline Poly poly_interpolate(const std::vector<Rational>& points,
                             const std::vector<Rational>& values) {
  const size_t n = points.size();
  std::vector<Rational> dd(values);  // dd[i] becomes f[x_0..x_i]
  for (size_t level = 1; level < n; ++level)
    for (size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (points[i] - points[i - level]);
  // expand sum_i dd[i] * prod_{j<i} (x - x_j)
  Poly result;
  Poly basis{Rational(1)};
  for (size_t i = 0; i < n; ++i) {
    result = poly_add(result, poly_scale(basis, dd[i]));
    basis = poly_mul(basis, Poly{-points[i], Rational(1)});
  }
  return result;
}

}  // namespace pitel

#endif  // PITEL_POLY_HPP
