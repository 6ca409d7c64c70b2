/*
 * Copyright 2026 The monoclique Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * SPDX-License-Identifier: Apache-2.0
 */


#include "monoclique/report.hpp"

#include <sstream>

namespace monoclique {
namespace {

std::string count_or_budget(const std::optional<std::size_t>& v) {
  return v ? std::to_string(*v) : std::string("budget-exceeded");
}

std::string witness_text(const std::optional<Assignment>& w) {
  return w ? w->to_string() : std::string("none");
}

std::string join_vars(std::span<const VarIndex> vars) {
  std::string out;
  for (VarIndex v : vars) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out.empty() ? "none" : out;
}

}  // namespace

std::string format_header(std::size_t guard, std::size_t budget) {
  return "# monoclique guard=" + std::to_string(guard) + " budget=" + std::to_string(budget) +
         "\n";
}

std::string format_equivalence_report(const EquivalenceReport& r) {
  std::ostringstream out;
  out << "verdict=" << verdict_name(r.verdict()) << '\n';
  out << "witness=" << witness_text(r.witness()) << '\n';
  out << "checked=" << r.checked() << '\n';
  if (r.size_f()) out << "size_before=" << *r.size_f() << '\n';
  if (r.size_g()) out << "size_after=" << *r.size_g() << '\n';
  return out.str();
}

std::string format_theorem_report(const TheoremReport& r) {
  std::ostringstream out;
  out << "theorem=" << r.theorem << '\n';
  out << "mode=" << mode_name(r.mode) << '\n';
  out << "m=" << r.spec.m() << '\n';
  out << "s=" << r.spec.s() << '\n';
  out << "var=" << join_vars(r.substituted) << '\n';
  out << "verdict=" << verdict_name(r.verdict) << '\n';
  out << "witness=" << witness_text(r.witness) << '\n';
  out << "checked=" << r.checked << '\n';
  if (r.witness) {
    out << "value_after=" << (*r.value_after ? 1 : 0) << '\n';
    out << "oracle_value=" << (*r.oracle_value ? 1 : 0) << '\n';
    if (r.failing_var) out << "failing_var=" << *r.failing_var << '\n';
    if (r.p_at_witness) out << "p_at_witness=" << (*r.p_at_witness ? 1 : 0) << '\n';
  }
  out << "case=" << proof_case_name(r.proof_case) << '\n';
  out << "contradictory_monomial=" << (r.contradictory_monomial ? 1 : 0) << '\n';
  out << "size_before=" << r.size_before << '\n';
  if (r.verdict != Verdict::BudgetExceeded) {
    out << "size_after=" << r.size_after << '\n';
    out << "size_not_increased=" << (r.size_not_increased() ? 1 : 0) << '\n';
  }
  out << "dnf_monomials_before=" << count_or_budget(r.dnf_monomials_before) << '\n';
  out << "dnf_monomials_after=" << count_or_budget(r.dnf_monomials_after) << '\n';
  if (r.seed) out << "seed=" << *r.seed << '\n';
  return out.str();
}

std::string format_search_result(const SearchResult& r, const SearchOptions& options) {
  std::ostringstream out;
  out << "search_seed=" << options.seed << '\n';
  out << "depth=" << options.depth << '\n';
  out << "trials=" << r.trials << '\n';
  out << "checks=" << r.checks << '\n';
  out << "failures=" << r.failures.size() << '\n';
  for (const TheoremReport& f : r.failures) out << '\n' << format_theorem_report(f);
  return out.str();
}

std::string format_blowup_csv(std::span<const BlowupRow> rows) {
  std::ostringstream out;
  out << kBlowupCsvHeader << '\n';
  for (const BlowupRow& row : rows) {
    out << row.m << ',' << row.s << ',' << row.pivots << ',' << row.gates << ','
        << count_or_budget(row.dnf_monomials) << ',' << count_or_budget(row.monotone_monomials)
        << ',' << row.canonical_count << '\n';
  }
  return out.str();
}

}  // namespace monoclique
