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
#include "pitel/catalog.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pitel/constants.hpp"

namespace pitel {

PrintedValue PrintedValue::single(Surd coeff, int pi_exp) {
  PrintedValue v;
  v.terms_.push_back({std::move(coeff), pi_exp});
  v.normalize();
  return v;
}

void PrintedValue::normalize() {
  std::stable_sort(terms_.begin(), terms_.end(),
                   [](const Term& a, const Term& b) {
                     return a.pi_exp > b.pi_exp;
                   });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().pi_exp == t.pi_exp)
      merged.back().coeff += t.coeff;
    else
      merged.push_back(std::move(t));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Term& t) { return t.coeff.is_zero(); }),
               merged.end());
  terms_ = std::move(merged);
}

PrintedValue& PrintedValue::operator+=(const PrintedValue& rhs) {
  for (const auto& t : rhs.terms_) terms_.push_back(t);
  normalize();
  return *this;
}

PrintedValue& PrintedValue::operator-=(const PrintedValue& rhs) {
  for (const auto& t : rhs.terms_) terms_.push_back({-t.coeff, t.pi_exp});
  normalize();
  return *this;
}

PrintedValue PrintedValue::scaled(const Rational& c) const {
  PrintedValue out;
  for (const auto& t : terms_) out.terms_.push_back({t.coeff * c, t.pi_exp});
  out.normalize();
  return out;
}

BigReal PrintedValue::numeric(unsigned precision_bits) const {
  const unsigned wp = precision_bits + 24;
  const BigReal pi = pi_reference(wp);
  BigReal acc(wp);
  for (const auto& t : terms_) acc += t.coeff.eval(wp) * pi.pow_int(t.pi_exp);
  return acc.to_precision(precision_bits);
}

std::string PrintedValue::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + t.coeff.str() + ")";
    if (t.pi_exp != 0) out += "*pi^" + std::to_string(t.pi_exp);
  }
  return out;
}

namespace {

Rational rat_pow(Rational base, unsigned e) {
  Rational acc(1);
  for (unsigned i = 0; i < e; ++i) acc *= base;
  return acc;
}

std::string instance_suffix(long p, long q, long r) {
  auto piece = [](char c, long v) {
    std::string s(1, c);
    if (v < 0) s += "m" + std::to_string(-v);
    else s += std::to_string(v);
    return s;
  };
  return piece('p', p) + piece('q', q) + piece('r', r);
}

std::string rational_text(const Rational& v) { return to_string(v); }

SeriesParams uniform_params(Family family, int m, const Rational& x, long p,
                            long q, long r) {
  SeriesParams params;
  params.family = family;
  params.m = m;
  params.x.assign(m, x);
  params.p.assign(m, p);
  params.q.assign(m, q);
  params.r.assign(m, r);
  return params;
}

// --- builders, one per printed identity shape --------------------------

// Single-factor T1 identity with free shifts: the brace reduces to the
// constant (p-r+x)(1+q-r-x), which the printed form divides out.
CatalogEntry t1_single(const std::string& id, int example_no,
                       const Rational& x, long p, long q, long r) {
  CatalogEntry e;
  e.id = id;
  e.params = uniform_params(Family::T1, 1, x, p, q, r);
  e.rho = (Rational(p - r) + x) * (Rational(1 + q - r) - x);
  e.pref_scale = 1;
  e.printed_bracket = {Rational(1)};
  const Surd sin_x = sin_pi_exact(x).value();
  e.printed_lhs = PrintedValue::single(sin_x * (Rational(1) / e.rho), -1);
  e.printed_boundary =
      PrintedValue::single(Surd(boundary_term(e.params) / e.rho), 0);
  std::ostringstream prov;
  if (example_no > 0)
    prov << "example " << example_no << " (corollary 2 with x = "
         << rational_text(x) << "), instance p=" << p << " q=" << q
         << " r=" << r;
  else
    prov << "corollary 2 at x = " << rational_text(x) << ", p=" << p
         << " q=" << q << " r=" << r;
  e.provenance = prov.str();
  return e;
}

// Two-factor T1 identity at zero shifts; the printed brace is the monic
// k^2 + k + c0.
CatalogEntry t1_pair(const std::string& id, int example_no, const Rational& x,
                     const Rational& y) {
  CatalogEntry e;
  e.id = id;
  e.params = uniform_params(Family::T1, 2, x, 0, 0, 0);
  e.params.x = {x, y};
  e.rho = x + y - x * x - y * y;
  const Rational c0 = x * y * (1 - x) * (1 - y) / e.rho;
  e.pref_scale = 1;
  e.printed_bracket = {c0, Rational(1), Rational(1)};
  const Surd product = sin_pi_exact(x).value() * sin_pi_exact(y).value();
  e.printed_lhs = PrintedValue::single(product * (Rational(1) / e.rho), -2);
  e.printed_boundary = PrintedValue();
  std::ostringstream prov;
  prov << "example " << example_no << " (corollary 3 with x = "
       << rational_text(x) << ", y = " << rational_text(y) << ")";
  e.provenance = prov.str();
  return e;
}

// m-th power T1 identity at zero shifts; the printed brace equals the
// generic one: prod (k+x)^m (k+1-x)^m - k^m (k+1)^m.
CatalogEntry t1_power(const std::string& id, int corollary_no,
                      const Rational& x, int m) {
  CatalogEntry e;
  e.id = id;
  e.params = uniform_params(Family::T1, m, x, 0, 0, 0);
  e.rho = 1;
  e.pref_scale = 1;
  Poly lhs_factor = poly_mul(Poly{x, Rational(1)}, Poly{1 - x, Rational(1)});
  Poly rhs_factor = poly_mul(Poly{Rational(0), Rational(1)},
                             Poly{Rational(1), Rational(1)});
  Poly first{Rational(1)}, second{Rational(1)};
  for (int i = 0; i < m; ++i) {
    first = poly_mul(first, lhs_factor);
    second = poly_mul(second, rhs_factor);
  }
  e.printed_bracket = poly_sub(first, second);
  e.printed_lhs =
      PrintedValue::single(sin_pi_exact(x).value().pow(m), -m);
  e.printed_boundary = PrintedValue();
  std::ostringstream prov;
  prov << "corollary " << corollary_no << " (x_i = " << rational_text(x)
       << ", zero shifts), m = " << m;
  e.provenance = prov.str();
  return e;
}

// Single-factor T12 identity with free shifts; brace constant
// (1+p-r-x)(1+q-r-x) divided out in the printed form.
CatalogEntry t12_single(const std::string& id, int example_no,
                        const Rational& x, long p, long q, long r) {
  CatalogEntry e;
  e.id = id;
  e.params = uniform_params(Family::T12, 1, x, p, q, r);
  e.rho = (Rational(1 + p - r) - x) * (Rational(1 + q - r) - x);
  e.pref_scale = 1;
  e.printed_bracket = {Rational(1)};
  const Surd inv_sin = sin_pi_exact(x).value().inverse();
  e.printed_lhs = PrintedValue::single(inv_sin * (Rational(1) / e.rho), 1);
  e.printed_boundary =
      PrintedValue::single(Surd(boundary_term(e.params) / e.rho), 0);
  std::ostringstream prov;
  if (example_no > 0)
    prov << "example " << example_no << " (corollary 13 with x = "
         << rational_text(x) << "), instance p=" << p << " q=" << q
         << " r=" << r;
  else
    prov << "corollary 13 at x = " << rational_text(x) << ", p=" << p
         << " q=" << q << " r=" << r;
  e.provenance = prov.str();
  return e;
}

// Two-factor T12 identity at zero shifts. The printed form scales the
// brace to k^2 + 2k + c0, shifts the Pochhammer bases to (1+x)_k (3-x)_k,
// and moves the boundary term onto the left-hand side.
CatalogEntry t12_pair(const std::string& id, int example_no, const Rational& x,
                      const Rational& y) {
  CatalogEntry e;
  e.id = id;
  e.params = uniform_params(Family::T12, 2, x, 0, 0, 0);
  e.params.x = {x, y};
  const Rational s = 2 - 2 * x - 2 * y + x * x + y * y;
  const Rational c0 = (1 - x * y * (2 - x) * (2 - y)) / s;
  const Rational scale =
      x * (1 - x) * (2 - x) * y * (1 - y) * (2 - y);  // prefactor shift
  e.rho = s / scale;
  e.pref_scale = scale;
  e.printed_bracket = {c0, Rational(2), Rational(1)};
  const Surd inv_sin =
      (sin_pi_exact(x).value() * sin_pi_exact(y).value()).inverse();
  const Rational inv_rho = Rational(1) / e.rho;
  e.printed_lhs = PrintedValue::single(inv_sin * inv_rho, 2) -
                  PrintedValue::single(
                      Surd(boundary_term(e.params) * inv_rho), 0);
  e.printed_boundary = PrintedValue();
  std::ostringstream prov;
  prov << "example " << example_no << " (corollary 14 with x = "
       << rational_text(x) << ", y = " << rational_text(y) << ")";
  e.provenance = prov.str();
  return e;
}

// m-th power T12 identity at zero shifts; printed as (base_pi * pi)^m -
// base_0^m with the boundary folded into the left-hand side.
CatalogEntry t12_power(const std::string& id, int corollary_no,
                       const Rational& x, int m) {
  CatalogEntry e;
  e.id = id;
  e.params = uniform_params(Family::T12, m, x, 0, 0, 0);
  const Rational d1 = x * (1 - x) * (2 - x);  // per-factor prefactor shift
  e.rho = rat_pow(Rational(1) / d1, m);
  e.pref_scale = rat_pow(d1, m);
  Poly lhs_factor = poly_mul(Poly{Rational(1), Rational(1)},
                             Poly{Rational(1), Rational(1)});
  Poly rhs_factor = poly_mul(Poly{x, Rational(1)}, Poly{2 - x, Rational(1)});
  Poly first{Rational(1)}, second{Rational(1)};
  for (int i = 0; i < m; ++i) {
    first = poly_mul(first, lhs_factor);
    second = poly_mul(second, rhs_factor);
  }
  e.printed_bracket = poly_sub(first, second);
  const Surd base_pi = sin_pi_exact(x).value().inverse() * d1;
  const Rational base_0 = x * (2 - x);
  e.printed_lhs = PrintedValue::single(base_pi.pow(m), m) -
                  PrintedValue::single(Surd(rat_pow(base_0, m)), 0);
  e.printed_boundary = PrintedValue();
  std::ostringstream prov;
  prov << "corollary " << corollary_no << " (x_i = " << rational_text(x)
       << ", zero shifts), m = " << m;
  e.provenance = prov.str();
  return e;
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;

  const std::vector<std::array<long, 3>> shift_tuples = {
      {0, 0, 0}, {1, 0, 0}, {1, 1, 1}, {2, 1, 0}};
  // x values of the eight single-factor identities, in printed order
  const std::vector<Rational> single_x = {
      Rational(1, 2), Rational(1, 6), Rational(1, 4),  Rational(1, 3),
      Rational(1, 10), Rational(3, 10), Rational(1, 12), Rational(5, 12)};
  // (x, y) pairs of the twelve two-factor identities, in printed order
  const std::vector<std::pair<Rational, Rational>> pair_xy = {
      {Rational(1, 2), Rational(1, 2)},  {Rational(1, 3), Rational(1, 3)},
      {Rational(1, 4), Rational(1, 4)},  {Rational(1, 6), Rational(1, 6)},
      {Rational(1, 2), Rational(1, 6)},  {Rational(1, 10), Rational(3, 10)},
      {Rational(1, 12), Rational(5, 12)}, {Rational(1, 2), Rational(1, 4)},
      {Rational(1, 4), Rational(1, 6)},  {Rational(1, 2), Rational(1, 3)},
      {Rational(1, 3), Rational(1, 6)},  {Rational(1, 3), Rational(1, 4)}};

  // examples 1..8, instantiated
  for (int i = 0; i < 8; ++i) {
    const int ex = 1 + i;
    for (const auto& t : shift_tuples) {
      std::string id = "t1.ex" + std::to_string(ex) + "." +
                       instance_suffix(t[0], t[1], t[2]);
      out.push_back(t1_single(id, ex, single_x[i], t[0], t[1], t[2]));
    }
  }
  // examples 9..20
  for (int i = 0; i < 12; ++i) {
    const int ex = 9 + i;
    out.push_back(t1_pair("t1.ex" + std::to_string(ex), ex, pair_xy[i].first,
                          pair_xy[i].second));
  }
  // corollaries 4..11 at m = 1..3
  for (int i = 0; i < 8; ++i) {
    const int cor = 4 + i;
    for (int m = 1; m <= 3; ++m) {
      std::string id =
          "t1.cor" + std::to_string(cor) + ".m" + std::to_string(m);
      out.push_back(t1_power(id, cor, single_x[i], m));
    }
  }
  // corollary 2 spot instances outside the printed example set
  out.push_back(t1_single("t1.cor2.x2-3.p1q2r1", 0, Rational(2, 3), 1, 2, 1));
  out.push_back(t1_single("t1.cor2.x5-6.p0q1r1", 0, Rational(5, 6), 0, 1, 1));

  // examples 21..28, instantiated
  for (int i = 0; i < 8; ++i) {
    const int ex = 21 + i;
    for (const auto& t : shift_tuples) {
      std::string id = "t12.ex" + std::to_string(ex) + "." +
                       instance_suffix(t[0], t[1], t[2]);
      out.push_back(t12_single(id, ex, single_x[i], t[0], t[1], t[2]));
    }
  }
  // examples 29..40
  for (int i = 0; i < 12; ++i) {
    const int ex = 29 + i;
    out.push_back(t12_pair("t12.ex" + std::to_string(ex), ex,
                           pair_xy[i].first, pair_xy[i].second));
  }
  // corollaries 15..22 at m = 1..3
  for (int i = 0; i < 8; ++i) {
    const int cor = 15 + i;
    for (int m = 1; m <= 3; ++m) {
      std::string id =
          "t12.cor" + std::to_string(cor) + ".m" + std::to_string(m);
      out.push_back(t12_power(id, cor, single_x[i], m));
    }
  }
  // corollary 13 spot instances, including a negative r
  out.push_back(
      t12_single("t12.cor13.x3-4.p1q1r2", 0, Rational(3, 4), 1, 1, 2));
  out.push_back(
      t12_single("t12.cor13.x1-6.p2q0rm1", 0, Rational(1, 6), 2, 0, -1));
  out.push_back(
      t12_single("t12.cor13.x9-10.p0q0r0", 0, Rational(9, 10), 0, 0, 0));

  return out;
}

}  // namespace

const std::vector<CatalogEntry>& all_entries() {
  static const std::vector<CatalogEntry> catalog = build_catalog();
  return catalog;
}

const CatalogEntry* find_entry(const std::string& id) {
  for (const auto& e : all_entries())
    if (e.id == id) return &e;
  return nullptr;
}

bool check_normalization(const CatalogEntry& entry) {
  try {
    if (!validate(entry.params).empty()) return false;
    // (a) summand level, k = 0..5, exact
    for (long k = 0; k <= 5; ++k) {
      const Rational printed_term = entry.pref_scale *
                                    prefactor(entry.params, k) *
                                    poly_eval(entry.printed_bracket, k);
      if (summand(entry.params, k) != entry.rho * printed_term) return false;
    }
    // (b) limit level, exact surd identity
    const LimitSpec limit = limit_value(entry.params);
    if (!limit.surd_factor.has_value()) return false;
    PrintedValue generic =
        PrintedValue::single(*limit.surd_factor, limit.pi_exponent) -
        PrintedValue::single(Surd(boundary_term(entry.params)), 0);
    PrintedValue printed =
        (entry.printed_lhs - entry.printed_boundary).scaled(entry.rho);
    return printed == generic;
  } catch (const Error&) {
    return false;
  }
}

EvalReport verify_entry(const CatalogEntry& entry, unsigned precision_bits,
                        const BigReal& tolerance) {
  EvalReport rep = verify_identity(entry.params, precision_bits, tolerance);
  // Rescale into printed units and check the printed left-hand side too.
  const unsigned wp = precision_bits + 16;
  BigReal printed_approx = rep.approximation.to_precision(wp);
  printed_approx.mul_rational(Rational(1) / entry.rho);
  printed_approx += entry.printed_boundary.numeric(wp);
  const BigReal printed_target = entry.printed_lhs.numeric(wp);
  const BigReal printed_err = abs_diff(printed_approx, printed_target);
  const bool printed_pass = printed_err.compare(tolerance) <= 0;

  BigReal estimate = rep.error_estimate;
  estimate.mul_rational(abs(Rational(1) / entry.rho));

  rep.approximation = printed_approx.to_precision(precision_bits);
  rep.target = printed_target.to_precision(precision_bits);
  rep.abs_error = printed_err.to_precision(precision_bits);
  rep.error_estimate = estimate.to_precision(precision_bits);
  rep.pass = rep.pass && printed_pass;
  return rep;
}

}  // namespace pitel
