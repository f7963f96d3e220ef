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
#ifndef PITEL_CATALOG_HPP
#define PITEL_CATALOG_HPP

#include <string>
#include <vector>

#include "pitel/evaluator.hpp"
#include "pitel/poly.hpp"
#include "pitel/series.hpp"
#include "pitel/surd.hpp"

namespace pitel {

/// Exact constant of the form sum_j c_j * pi^(e_j) with surd coefficients
/// c_j and distinct integer exponents e_j. Normal form: terms sorted by
/// descending exponent, zero coefficients dropped.
class PrintedValue {
 public:
  struct Term {
    Surd coeff;
    int pi_exp = 0;
    bool operator==(const Term&) const = default;
  };

  PrintedValue() = default;  // zero
  static PrintedValue single(Surd coeff, int pi_exp);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  PrintedValue& operator+=(const PrintedValue& rhs);
  PrintedValue& operator-=(const PrintedValue& rhs);
  friend PrintedValue operator+(PrintedValue a, const PrintedValue& b) {
    return a += b;
  }
  friend PrintedValue operator-(PrintedValue a, const PrintedValue& b) {
    return a -= b;
  }
  PrintedValue scaled(const Rational& c) const;
  bool operator==(const PrintedValue&) const = default;

  BigReal numeric(unsigned precision_bits) const;
  std::string str() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

/// One printed identity, as data. The generic series instance `params` is
/// tied to the printed right-hand side by
///
///   summand(params, k) = rho * printed_term(k)             for every k,
///   printed_term(k)    = pref_scale * prefactor(params, k)
///                        * printed_bracket(k),
///
/// and on the closed-form side by
///
///   rho * (printed_lhs - printed_boundary)
///       = limit_value(params) - boundary_term(params).
///
/// rho, pref_scale and the printed polynomials are frozen data, validated
/// exactly by check_normalization.
struct CatalogEntry {
  std::string id;
  SeriesParams params;
  Rational rho;
  Rational pref_scale;
  Poly printed_bracket;
  PrintedValue printed_lhs;
  PrintedValue printed_boundary;
  std::string provenance;
};

/// The full fixed catalog, deterministic order. Parameterized identities
/// are instantiated at (p,q,r) in {(0,0,0), (1,0,0), (1,1,1), (2,1,0)} and
/// power families at m in {1,2,3}.
const std::vector<CatalogEntry>& all_entries();

/// nullptr when the id is unknown.
const CatalogEntry* find_entry(const std::string& id);

/// Exact metadata validation (no floating point): the summand-level check
/// at k = 0..5 and the limit-level identity over surd coefficients. False
/// means the entry's data is wrong.
bool check_normalization(const CatalogEntry& entry);

/// Numeric verification of the printed identity: the generic identity via
/// verify_identity, plus |numeric(printed series value) -
/// rho^-1 * (series numeric)| <= tolerance. The returned report is in
/// printed units: approximation and target are the printed left-hand side.
EvalReport verify_entry(const CatalogEntry& entry, unsigned precision_bits,
                        const BigReal& tolerance);

/// The stable serialized subset of an entry (the JSON schema fields).
struct EntryRecord {
  std::string id;
  Family family = Family::T1;
  int m = 0;
  std::vector<Rational> x;
  std::vector<long> p, q, r;
  Rational rho;
  PrintedValue printed_lhs;
  std::string provenance;
  bool operator==(const EntryRecord&) const = default;
};

EntryRecord record_of(const CatalogEntry& entry);

/// JSON with stable key order; rationals as canonical "num/den" strings,
/// surds as radicand -> coefficient maps.
std::string emit_json(const CatalogEntry& entry);
EntryRecord parse_entry_json(const std::string& json_text);

/// LaTeX display of the full identity (left-hand side, series, boundary).
std::string emit_latex(const CatalogEntry& entry);

}  // namespace pitel

#endif  // PITEL_CATALOG_HPP
