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
#include "pitel/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <thread>

#include "pitel/catalog.hpp"
#include "pitel/constants.hpp"

namespace pitel {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;
constexpr int kIoError = 3;

unsigned digits_to_bits(int digits) {
  return static_cast<unsigned>(std::ceil(digits * std::log2(10.0))) + 32;
}

BigReal tolerance_from_exp(int exp10, unsigned precision_bits) {
  const BigInt p10 = boost::multiprecision::pow(BigInt(10), exp10);
  return BigReal(Rational(BigInt(1), p10), precision_bits);
}

// Smallest level count whose extrapolation floor comfortably beats the
// requested digit count on the base-16 schedule.
int levels_for_digits(int digits) {
  for (int levels = 5; levels <= 15; ++levels) {
    const double floor_digits =
        1.204 * levels + 0.301 * levels * (levels - 1) / 2.0;
    if (floor_digits >= digits + 6) return levels;
  }
  return 16;
}

size_t worker_count(size_t jobs) {
  size_t n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("PI_TELESCOPE_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) n = static_cast<size_t>(v);
  }
  return std::max<size_t>(1, std::min(n, jobs));
}

struct VerifyRow {
  std::string id;
  bool pass = false;
  std::string failure;  // nonempty if the evaluation itself failed
  std::optional<EvalReport> report;
};

ordered_json report_json(const std::string& id, const EvalReport& rep,
                         int digits) {
  ordered_json j;
  j["id"] = id;
  j["pass"] = rep.pass;
  j["approx"] = rep.approximation.to_decimal(static_cast<size_t>(digits) + 6);
  j["target"] = rep.target.to_decimal(static_cast<size_t>(digits) + 6);
  j["abs_error"] = rep.abs_error.to_decimal(4);
  j["method"] = method_name(rep.method);
  j["work"] = rep.work;
  j["millis"] = rep.wall_time.count() * 1000.0;
  return j;
}

void print_report_text(std::ostream& out, const std::string& id,
                       const EvalReport& rep, int digits) {
  out << std::left << std::setw(24) << id << (rep.pass ? "PASS" : "FAIL")
      << "  approx=" << rep.approximation.to_decimal(digits + 2)
      << "  target=" << rep.target.to_decimal(digits + 2)
      << "  abs_error=" << rep.abs_error.to_decimal(3)
      << "  method=" << method_name(rep.method) << " work=" << rep.work
      << " millis=" << std::fixed << std::setprecision(1)
      << rep.wall_time.count() * 1000.0 << "\n";
  out.unsetf(std::ios::floatfield);
}

int do_list(const std::string& family_filter, bool json_output,
            std::ostream& out, std::ostream& err) {
  std::optional<Family> filter;
  if (!family_filter.empty()) {
    filter = family_from_name(family_filter);
    if (!filter.has_value()) {
      err << "unknown family '" << family_filter << "' (expected T1 or T12)\n";
      return kUsage;
    }
  }
  ordered_json arr = ordered_json::array();
  for (const auto& e : all_entries()) {
    if (filter.has_value() && e.params.family != *filter) continue;
    if (json_output) {
      ordered_json j;
      j["id"] = e.id;
      j["family"] = family_name(e.params.family);
      j["m"] = e.params.m;
      j["lhs"] = e.printed_lhs.str();
      j["provenance"] = e.provenance;
      arr.push_back(j);
    } else {
      out << std::left << std::setw(24) << e.id << e.printed_lhs.str()
          << "  =  series of " << e.params.str() << "\n";
    }
  }
  if (json_output) out << arr.dump(2) << "\n";
  return kOk;
}

int do_verify(const std::vector<std::string>& ids, bool verify_all, int digits,
              int tolerance_exp, long base, int levels, bool json_output,
              std::ostream& out, std::ostream& err) {
  std::vector<const CatalogEntry*> selected;
  if (verify_all) {
    for (const auto& e : all_entries()) selected.push_back(&e);
  } else {
    if (ids.empty()) {
      err << "verify: give entry ids or --all\n";
      return kUsage;
    }
    for (const auto& id : ids) {
      const CatalogEntry* e = find_entry(id);
      if (e == nullptr) {
        err << "unknown entry id: " << id << "\n";
        return kUsage;
      }
      selected.push_back(e);
    }
  }

  // Working precision: the digit-derived floor, but at least the 256 bits
  // the catalog checks are calibrated for.
  const unsigned precision = std::max(digits_to_bits(digits), 256u);
  const BigReal tolerance = tolerance_from_exp(tolerance_exp, precision + 16);

  std::vector<VerifyRow> rows(selected.size());
  std::atomic<size_t> next{0};
  auto work = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= selected.size()) return;
      rows[i].id = selected[i]->id;
      try {
        EvalReport rep = verify_entry(*selected[i], precision, tolerance);
        rows[i].pass = rep.pass;
        rows[i].report = std::move(rep);
      } catch (const std::exception& e) {
        rows[i].failure = e.what();
      }
    }
  };
  const size_t nthreads = worker_count(selected.size());
  std::vector<std::thread> pool;
  for (size_t t = 0; t + 1 < nthreads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  std::sort(rows.begin(), rows.end(),
            [](const VerifyRow& a, const VerifyRow& b) { return a.id < b.id; });

  bool all_pass = true;
  ordered_json arr = ordered_json::array();
  for (const auto& row : rows) {
    if (row.report.has_value()) {
      if (json_output)
        arr.push_back(report_json(row.id, *row.report, digits));
      else
        print_report_text(out, row.id, *row.report, digits);
      all_pass = all_pass && row.pass;
    } else {
      all_pass = false;
      if (json_output) {
        ordered_json j;
        j["id"] = row.id;
        j["pass"] = false;
        j["error"] = row.failure;
        arr.push_back(j);
      } else {
        out << std::left << std::setw(24) << row.id << "FAIL  " << row.failure
            << "\n";
      }
    }
  }
  if (json_output) out << arr.dump(2) << "\n";
  if (!json_output)
    out << (all_pass ? "all entries passed" : "some entries FAILED") << " ("
        << rows.size() << " checked, tolerance 1e-" << tolerance_exp << ")\n";
  return all_pass ? kOk : kVerifyFailed;
}

int do_eval(const SeriesParams& params, int digits, const std::string& method,
            long max_terms, long base, int levels, bool json_output,
            std::ostream& out, std::ostream& err) {
  const auto violations = validate(params);
  if (!violations.empty()) {
    for (const auto& v : violations) err << "invalid parameters: " << v << "\n";
    return kUsage;
  }
  const unsigned precision = digits_to_bits(digits);
  const BigReal tolerance = tolerance_from_exp(digits, precision + 16);
  EvalReport rep;
  if (method == "direct") {
    rep = sum_direct(params, precision, max_terms, tolerance);
  } else {
    const int lv = levels > 0 ? levels : levels_for_digits(digits);
    rep = richardson_limit(params, base, lv, precision, tolerance);
  }
  if (json_output)
    out << report_json("user", rep, digits).dump(2) << "\n";
  else
    print_report_text(out, params.str(), rep, digits);
  return rep.pass ? kOk : kVerifyFailed;
}

int count_digit_mismatches(const std::string& a, const std::string& b) {
  int diffs = 0;
  const size_t n = std::min(a.size(), b.size());
  for (size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) ++diffs;
  diffs += static_cast<int>(a.size() > n ? a.size() - n : b.size() - n);
  return diffs;
}

int do_pi(const std::string& via, int digits, bool json_output,
          std::ostream& out, std::ostream& err) {
  const CatalogEntry* entry = find_entry(via);
  if (entry == nullptr) {
    err << "unknown entry id: " << via << "\n";
    return kUsage;
  }
  const LimitSpec limit = limit_value(entry->params);
  if (!limit.surd_factor.has_value()) {
    err << "entry " << via << " has no exact surd limit; cannot invert for pi\n";
    return kUsage;
  }
  const unsigned precision = digits_to_bits(digits) + 32;
  const int levels = levels_for_digits(digits + 2);
  EvalReport rep = richardson_limit(entry->params, 16, levels, precision);

  // series value + boundary = limit = surd * pi^e, so
  // pi = (surd / limit)^(1/m) for e = -m and (limit / surd)^(1/m) for e = m.
  const unsigned wp = precision + 16;
  BigReal limit_val = rep.approximation.to_precision(wp) +
                      BigReal(boundary_term(entry->params), wp);
  const BigReal surd_val = limit.surd_factor->eval(wp);
  const int m = entry->params.m;
  BigReal pi_val = limit.pi_exponent < 0 ? surd_val / limit_val
                                         : limit_val / surd_val;
  pi_val = pi_val.root(static_cast<unsigned>(m));

  // Propagated error: |dpi| ~ pi * (est / |limit|) / m, doubled for slack.
  BigReal rel = rep.error_estimate.to_precision(wp) / limit_val.abs();
  BigReal pi_err = pi_val * rel;
  pi_err /= m;
  pi_err *= 2;

  int printable = digits;
  if (!pi_err.is_zero()) {
    // est < 2^e2, so -log10(est) > -e2 * log10(2): a safe digit floor.
    const double save = -static_cast<double>(pi_err.exponent2()) * 0.3010299957;
    printable = std::min(printable, static_cast<int>(std::floor(save)));
  }
  if (printable < 1) {
    err << "error estimate too large to print any digits\n";
    return kVerifyFailed;
  }

  const std::string computed = pi_val.to_decimal(printable);
  const std::string reference =
      pi_reference(precision + 16).to_decimal(printable);
  const int diffs = count_digit_mismatches(computed, reference);

  if (json_output) {
    ordered_json j;
    j["via"] = via;
    j["digits"] = printable;
    j["pi"] = computed;
    j["reference_diff_digits"] = diffs;
    j["error_estimate"] = pi_err.to_decimal(3);
    j["work"] = rep.work;
    j["millis"] = rep.wall_time.count() * 1000.0;
    out << j.dump(2) << "\n";
  } else {
    out << "pi = " << computed << "\n";
    if (printable < digits)
      out << "(only " << printable << " of " << digits
          << " requested digits are supported by the error estimate)\n";
    out << "digits differing from the arctangent reference: " << diffs << "\n";
  }
  return kOk;
}

int do_emit(const std::vector<std::string>& ids, bool emit_all,
            const std::string& format, const std::string& out_path,
            std::ostream& out, std::ostream& err) {
  std::vector<const CatalogEntry*> selected;
  if (emit_all) {
    for (const auto& e : all_entries()) selected.push_back(&e);
  } else {
    if (ids.empty()) {
      err << "emit: give entry ids or --all\n";
      return kUsage;
    }
    for (const auto& id : ids) {
      const CatalogEntry* e = find_entry(id);
      if (e == nullptr) {
        err << "unknown entry id: " << id << "\n";
        return kUsage;
      }
      selected.push_back(e);
    }
  }
  std::string payload;
  if (format == "json") {
    if (selected.size() == 1) {
      payload = emit_json(*selected[0]) + "\n";
    } else {
      payload = "[\n";
      for (size_t i = 0; i < selected.size(); ++i)
        payload += emit_json(*selected[i]) + (i + 1 < selected.size() ? ",\n" : "\n");
      payload += "]\n";
    }
  } else {  // latex (validated by the option parser)
    for (const auto* e : selected) payload += emit_latex(*e) + "\n";
  }
  if (out_path.empty()) {
    out << payload;
  } else {
    std::ofstream file(out_path);
    if (!file) {
      err << "cannot open output file: " << out_path << "\n";
      return kIoError;
    }
    file << payload;
    if (!file.good()) {
      err << "write failed: " << out_path << "\n";
      return kIoError;
    }
  }
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"telescoping series for powers of pi: catalog, evaluation, "
               "verification"};
  app.name("pitel");
  app.require_subcommand(1);

  // list
  auto* list_cmd = app.add_subcommand("list", "list catalog entries");
  std::string list_family;
  bool list_json = false;
  list_cmd->add_option("--family", list_family, "restrict to T1 or T12");
  list_cmd->add_flag("--output-json", list_json,
                     "machine-readable output (same as --output json)");
  std::string list_output = "text";
  list_cmd->add_option("--output", list_output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // verify
  auto* verify_cmd =
      app.add_subcommand("verify", "verify printed identities numerically");
  std::vector<std::string> verify_ids;
  bool verify_all = false;
  int verify_digits = 10;
  int verify_tol_exp = -1;
  long verify_base = 16;
  int verify_levels = 9;
  std::string verify_output = "text";
  verify_cmd->add_option("ids", verify_ids, "entry ids");
  verify_cmd->add_flag("--all", verify_all, "verify the whole catalog");
  verify_cmd->add_option("--digits", verify_digits, "target decimal digits")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--tolerance-exp", verify_tol_exp,
                         "pass threshold 10^-T (default: digits)");
  verify_cmd->add_option("--base", verify_base, "first extrapolation node")
      ->check(CLI::Range(4L, 1024L));
  verify_cmd->add_option("--levels", verify_levels, "extrapolation levels")
      ->check(CLI::Range(2, 16));
  verify_cmd->add_option("--output", verify_output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // eval
  auto* eval_cmd =
      app.add_subcommand("eval", "evaluate a user-supplied series instance");
  std::string eval_family;
  int eval_m = 0;
  std::vector<std::string> eval_x;
  std::vector<long> eval_p, eval_q, eval_r;
  int eval_digits = 12;
  std::string eval_method = "richardson";
  long eval_max_terms = 100000;
  long eval_base = 16;
  int eval_levels = 0;
  std::string eval_output = "text";
  eval_cmd->add_option("--family", eval_family, "T1 or T12")->required();
  eval_cmd->add_option("--m", eval_m, "number of factors (cross-checked)");
  eval_cmd->add_option("--x", eval_x, "angle parameter a/b, repeat per factor")
      ->required();
  eval_cmd->add_option("--p", eval_p, "shift p_i, repeat per factor");
  eval_cmd->add_option("--q", eval_q, "shift q_i, repeat per factor");
  eval_cmd->add_option("--r", eval_r, "shift r_i, repeat per factor");
  eval_cmd->add_option("--digits", eval_digits, "target decimal digits")
      ->check(CLI::PositiveNumber);
  eval_cmd->add_option("--method", eval_method, "richardson or direct")
      ->check(CLI::IsMember({"richardson", "direct"}));
  eval_cmd->add_option("--max-terms", eval_max_terms,
                       "terms for --method direct")
      ->check(CLI::PositiveNumber);
  eval_cmd->add_option("--base", eval_base, "first extrapolation node")
      ->check(CLI::Range(4L, 1024L));
  eval_cmd->add_option("--levels", eval_levels,
                       "extrapolation levels (default: from digits)");
  eval_cmd->add_option("--output", eval_output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // pi
  auto* pi_cmd = app.add_subcommand("pi", "compute pi through an identity");
  std::string pi_via;
  int pi_digits = 15;
  std::string pi_output = "text";
  pi_cmd->add_option("--via", pi_via, "entry id to invert")->required();
  pi_cmd->add_option("--digits", pi_digits, "decimal digits to print")
      ->check(CLI::PositiveNumber);
  pi_cmd->add_option("--output", pi_output, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // emit
  auto* emit_cmd = app.add_subcommand("emit", "emit entries as JSON or LaTeX");
  std::vector<std::string> emit_ids;
  bool emit_all = false;
  std::string emit_format = "json";
  std::string emit_out_path;
  emit_cmd->add_option("ids", emit_ids, "entry ids");
  emit_cmd->add_flag("--all", emit_all, "emit the whole catalog");
  emit_cmd->add_option("--format", emit_format, "json or latex")
      ->check(CLI::IsMember({"json", "latex"}));
  emit_cmd->add_option("--out", emit_out_path, "output file (default stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kUsage;
  }

  try {
    if (*list_cmd)
      return do_list(list_family, list_json || list_output == "json", out, err);
    if (*verify_cmd) {
      if (verify_tol_exp < 0) verify_tol_exp = verify_digits;
      return do_verify(verify_ids, verify_all, verify_digits, verify_tol_exp,
                       verify_base, verify_levels, verify_output == "json",
                       out, err);
    }
    if (*eval_cmd) {
      SeriesParams params;
      auto fam = family_from_name(eval_family);
      if (!fam.has_value()) {
        err << "unknown family '" << eval_family << "' (expected T1 or T12)\n";
        return kUsage;
      }
      params.family = *fam;
      for (const auto& xs : eval_x) {
        try {
          params.x.push_back(parse_rational(xs));
        } catch (const Error& e) {
          err << e.what() << "\n";
          return kUsage;
        }
      }
      const int m = static_cast<int>(params.x.size());
      if (eval_m != 0 && eval_m != m) {
        err << "--m " << eval_m << " does not match " << m
            << " --x occurrences\n";
        return kUsage;
      }
      params.m = m;
      auto fill = [&](std::vector<long>& dst, const std::vector<long>& src,
                      const char* name) {
        if (src.empty()) {
          dst.assign(m, 0);
          return true;
        }
        if (static_cast<int>(src.size()) != m) {
          err << "--" << name << " given " << src.size() << " times, expected "
              << m << "\n";
          return false;
        }
        dst = src;
        return true;
      };
      if (!fill(params.p, eval_p, "p") || !fill(params.q, eval_q, "q") ||
          !fill(params.r, eval_r, "r"))
        return kUsage;
      return do_eval(params, eval_digits, eval_method, eval_max_terms,
                     eval_base, eval_levels, eval_output == "json", out, err);
    }
    if (*pi_cmd) return do_pi(pi_via, pi_digits, pi_output == "json", out, err);
    if (*emit_cmd)
      return do_emit(emit_ids, emit_all, emit_format, emit_out_path, out, err);
  } catch (const DomainError& e) {
    err << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kVerifyFailed;
  }
  return kUsage;
}

}  // namespace pitel
