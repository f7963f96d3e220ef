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
#include <json.hpp>

#include <map>
#include <sstream>

#include "pitel/catalog.hpp"

namespace pitel {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json surd_to_json(const Surd& s) {
  ordered_json out = ordered_json::object();
  for (int d : Surd::kBasis) {
    const Rational& c = s.coefficient(d);
    if (c != 0) out[std::to_string(d)] = to_string(c);
  }
  return out;
}

Surd surd_from_json(const ordered_json& j) {
  Surd s;
  for (auto it = j.begin(); it != j.end(); ++it) {
    const int d = std::stoi(it.key());
    s += Surd::term(parse_rational(it.value().get<std::string>()), d);
  }
  return s;
}

}  // namespace

EntryRecord record_of(const CatalogEntry& entry) {
  EntryRecord rec;
  rec.id = entry.id;
  rec.family = entry.params.family;
  rec.m = entry.params.m;
  rec.x = entry.params.x;
  rec.p = entry.params.p;
  rec.q = entry.params.q;
  rec.r = entry.params.r;
  rec.rho = entry.rho;
  rec.printed_lhs = entry.printed_lhs;
  rec.provenance = entry.provenance;
  return rec;
}

std::string emit_json(const CatalogEntry& entry) {
  ordered_json j;
  j["id"] = entry.id;
  j["family"] = family_name(entry.params.family);
  j["m"] = entry.params.m;
  ordered_json xs = ordered_json::array();
  for (const auto& xi : entry.params.x) xs.push_back(to_string(xi));
  j["x"] = xs;
  j["p"] = entry.params.p;
  j["q"] = entry.params.q;
  j["r"] = entry.params.r;
  j["rho"] = to_string(entry.rho);
  ordered_json lhs = ordered_json::array();
  for (const auto& t : entry.printed_lhs.terms()) {
    ordered_json term;
    term["coeff"] = surd_to_json(t.coeff);
    term["pi_exp"] = t.pi_exp;
    lhs.push_back(term);
  }
  j["printed_lhs"] = lhs;
  j["provenance"] = entry.provenance;
  return j.dump(2);
}

EntryRecord parse_entry_json(const std::string& json_text) {
  ordered_json j;
  try {
    j = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad entry JSON: ") + e.what());
  }
  try {
    EntryRecord rec;
    rec.id = j.at("id").get<std::string>();
    auto fam = family_from_name(j.at("family").get<std::string>());
    if (!fam.has_value()) throw DomainError("bad entry JSON: unknown family");
    rec.family = *fam;
    rec.m = j.at("m").get<int>();
    for (const auto& xi : j.at("x"))
      rec.x.push_back(parse_rational(xi.get<std::string>()));
    rec.p = j.at("p").get<std::vector<long>>();
    rec.q = j.at("q").get<std::vector<long>>();
    rec.r = j.at("r").get<std::vector<long>>();
    rec.rho = parse_rational(j.at("rho").get<std::string>());
    PrintedValue lhs;
    for (const auto& t : j.at("printed_lhs"))
      lhs += PrintedValue::single(surd_from_json(t.at("coeff")),
                                  t.at("pi_exp").get<int>());
    rec.printed_lhs = lhs;
    rec.provenance = j.at("provenance").get<std::string>();
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("bad entry JSON: ") + e.what());
  }
}

// ------------------------- LaTeX rendering ------------------------------

namespace {

// "k", "k+2", "k-1"
std::string offset_index(long off) {
  if (off == 0) return "k";
  if (off > 0) return "k+" + std::to_string(off);
  return "k-" + std::to_string(-off);
}

std::string frac_latex(const Rational& v) {
  if (denominator(v) == 1) return numerator(v).str();
  std::string sign = v < 0 ? "-" : "";
  return sign + "\\frac{" + abs(numerator(v)).str() + "}{" +
         denominator(v).str() + "}";
}

std::string pi_power_latex(int e) {
  if (e == 1) return "\\pi";
  std::string exp = std::to_string(e);
  return exp.size() == 1 ? "\\pi^" + exp : "\\pi^{" + exp + "}";
}

// Renders one coeff * pi^e as a (possibly signed) \frac. Numerators list
// the surd parts over a common denominator, largest radicand first.
std::string term_latex(const Surd& coeff, int pi_exp) {
  BigInt den(1);
  for (int d : Surd::kBasis)
    den = lcm(den, denominator(coeff.coefficient(d)));
  struct Part {
    BigInt n;
    int d = 1;
  };
  std::vector<Part> parts;
  for (auto it = Surd::kBasis.rbegin(); it != Surd::kBasis.rend(); ++it) {
    const Rational c = coeff.coefficient(*it) * den;
    if (c != 0) parts.push_back({numerator(c), *it});
  }
  bool negative = false;
  if (!parts.empty() && parts[0].n < 0) {
    negative = true;
    for (auto& p : parts) p.n = -p.n;
  }
  std::string num;
  for (size_t i = 0; i < parts.size(); ++i) {
    const BigInt mag = abs(parts[i].n);
    std::string piece;
    if (parts[i].d == 1)
      piece = mag.str();
    else
      piece = (mag == 1 ? "" : mag.str()) + "\\sqrt{" +
              std::to_string(parts[i].d) + "}";
    if (i == 0)
      num = piece;
    else
      num += (parts[i].n < 0 ? "-" : "+") + piece;
  }
  if (num.empty()) num = "0";
  const bool multi = parts.size() > 1;

  std::string den_str = den == 1 ? "" : den.str();
  if (pi_exp > 0) {
    std::string n = multi ? "(" + num + ")" : num;
    if (n == "1") n = "";
    n += pi_power_latex(pi_exp);
    num = n;
  } else if (pi_exp < 0) {
    den_str += pi_power_latex(-pi_exp);
  }
  std::string body = den_str.empty()
                         ? num
                         : "\\frac{" + num + "}{" + den_str + "}";
  return negative ? "-" + body : body;
}

std::string printed_value_latex(const PrintedValue& v) {
  if (v.is_zero()) return "0";
  std::string out;
  for (const auto& t : v.terms()) {
    std::string piece = term_latex(t.coeff, t.pi_exp);
    if (out.empty()) {
      out = piece;
    } else if (!piece.empty() && piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

// "k^2+2k+7/8": inline rational constants, matching the printed braces.
std::string poly_latex(const Poly& p) {
  std::string out;
  for (size_t i = p.size(); i-- > 0;) {
    const Rational& c = p[i];
    if (c == 0) continue;
    std::string piece;
    const Rational mag = c < 0 ? Rational(-c) : c;
    if (i == 0)
      piece = to_string(mag);
    else {
      if (mag != 1) piece = to_string(mag);
      piece += i == 1 ? "k" : "k^" + std::to_string(i);
    }
    if (out.empty())
      out = (c < 0 ? "-" : "") + piece;
    else
      out += (c < 0 ? "-" : "+") + piece;
  }
  return out.empty() ? "0" : out;
}

// Pochhammer / factorial atoms grouped into powers.
class AtomGroup {
 public:
  void add(const std::string& atom) { ++counts_[atom]; }
  std::string str() const {
    std::string out;
    for (const auto& [atom, count] : counts_) {
      if (!out.empty()) out += "\\,";
      out += atom;
      if (count > 1) out += "^" + std::to_string(count);
    }
    return out.empty() ? "1" : out;
  }

 private:
  std::map<std::string, int> counts_;  // ordered: deterministic output
};

std::string pochhammer_atom(const Rational& base, long off) {
  return "(" + to_string(base) + ")_{" + offset_index(off) + "}";
}

std::string factorial_atom(long off) {
  return off == 0 ? "k!" : "(" + offset_index(off) + ")!";
}

std::string series_latex(const CatalogEntry& e) {
  const SeriesParams& p = e.params;
  AtomGroup num, den;
  const bool shifted = e.pref_scale != 1;  // printed with shifted bases
  for (int i = 0; i < p.m; ++i) {
    const Rational& x = p.x[i];
    if (p.family == Family::T1) {
      num.add(pochhammer_atom(x, p.p[i]));
      num.add(pochhammer_atom(1 - x, p.q[i]));
      den.add(factorial_atom(p.r[i]));
      den.add(factorial_atom(p.p[i] + p.q[i] - p.r[i] + 1));
    } else {
      num.add(factorial_atom(p.p[i]));
      num.add(factorial_atom(p.q[i]));
      if (shifted) {
        // (x)_{k+1} = x (1+x)_k etc.; the constant lives in pref_scale
        den.add(pochhammer_atom(1 + x, 0));
        den.add(pochhammer_atom(3 - x, 0));
      } else {
        den.add(pochhammer_atom(x, p.r[i] + 1));
        den.add(pochhammer_atom(1 - x, p.p[i] + p.q[i] - p.r[i] + 2));
      }
    }
  }
  std::string out = "\\sum_{k=0}^{\\infty} \\frac{" + num.str() + "}{" +
                    den.str() + "}";
  if (e.printed_bracket != Poly{Rational(1)})
    out += " \\left\\{" + poly_latex(e.printed_bracket) + "\\right\\}";
  return out;
}

}  // namespace

std::string emit_latex(const CatalogEntry& entry) {
  std::string rhs = series_latex(entry);
  if (!entry.printed_boundary.is_zero()) {
    std::string b = printed_value_latex(entry.printed_boundary);
    if (!b.empty() && b[0] == '-')
      rhs += " - " + b.substr(1);
    else
      rhs += " + " + b;
  }
  std::ostringstream os;
  os << "% " << entry.id << ": " << entry.provenance << "\n"
     << "\\[\n"
     << printed_value_latex(entry.printed_lhs) << " = " << rhs << "\n"
     << "\\]\n";
  return os.str();
}

}  // namespace pitel
