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


// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "monoclique/circuit.hpp"
#include "monoclique/clique.hpp"
#include "monoclique/dnf.hpp"
#include "monoclique/netlist.hpp"
#include "monoclique/passes.hpp"
#include "monoclique/report.hpp"
#include "monoclique/verify.hpp"
#include "oracles.hpp"

namespace mc = monoclique;

namespace {

constexpr std::uint64_t kCorpusSeed = 20240601;
constexpr std::size_t kCorpusSize = 1000;

struct Outcome {
  bool pass = true;
  std::string detail;
  // Everything the criterion produced that should be reproducible.
  std::string transcript;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Criterion {
  int id;
  const char* name;
  double limit_seconds;
  std::function<Outcome()> run;
};

const std::vector<mc::Circuit>& corpus() {
  static const auto c = mc::testing::random_corpus(kCorpusSize, 10, 50, kCorpusSeed);
  return c;
}

bool equivalent(const mc::Evaluatable& f, const mc::Evaluatable& g) {
  return mc::equiv_exhaustive(f, g, {mc::kMaxGuard, 1}).verdict() == mc::Verdict::Equivalent;
}

std::set<std::set<std::size_t>> monomial_edge_sets(const mc::Dnf& d) {
  std::set<std::set<std::size_t>> out;
  for (const mc::Monomial& m : d.monomials()) {
    std::set<std::size_t> edges;
    for (std::size_t j = 0; j < d.num_vars(); ++j)
      if (m.pos >> j & 1) edges.insert(j);
    out.insert(std::move(edges));
  }
  return out;
}

Outcome standardization() {
  Outcome o;
  std::size_t count = 0;
  for (const mc::Circuit& c : corpus()) {
    const mc::Circuit st = mc::standardize(c);
    if (!mc::is_standard(st)) o.fail("not standard: " + mc::serialize_netlist(c));
    if (mc::size(st) > 2 * mc::size(c)) o.fail("size more than doubled: " + mc::serialize_netlist(c));
    if (!equivalent(mc::Evaluatable::of(c), mc::Evaluatable::of(st)))
      o.fail("function changed: " + mc::serialize_netlist(c));
    o.transcript += mc::serialize_netlist(st);
    ++count;
  }
  o.detail = o.pass ? std::to_string(count) + " circuits" : o.detail;
  return o;
}

Outcome dnf_soundness() {
  Outcome o;
  std::size_t expanded = 0;
  std::size_t over_budget = 0;
  for (const mc::Circuit& c : corpus()) {
    mc::Dnf d;
    try {
      d = mc::to_dnf(mc::standardize(c));
    } catch (const mc::DnfBudgetExceeded&) {
      ++over_budget;
      continue;
    }
    ++expanded;
    if (!equivalent(mc::Evaluatable::of(c), mc::Evaluatable::of(d)))
      o.fail("to_dnf changed the function: " + mc::serialize_netlist(c));
    for (mc::VarIndex v = 0; v < d.num_vars(); ++v) {
      const mc::Factored f = mc::factor(d, v);
      const std::uint64_t bit = std::uint64_t{1} << v;
      for (const mc::Monomial& m : f.p.monomials())
        if ((m.pos | m.neg) & bit) o.fail("p mentions the factored variable");
      for (const mc::Monomial& m : f.rest.monomials())
        if (m.neg & bit) o.fail("rest mentions the negated variable");
      const auto recombined = mc::Evaluatable::pointwise(d.num_vars(), [&](const mc::Assignment& a) {
        return (!a[v] && mc::eval_dnf(f.p, a)) || mc::eval_dnf(f.rest, a);
      });
      if (!equivalent(mc::Evaluatable::of(d), recombined)) o.fail("recombination law broken");
    }
    o.transcript += mc::format_dnf(d);
  }
  if (expanded == 0) o.fail("no circuit expanded within budget");
  if (o.pass)
    o.detail = std::to_string(expanded) + " expanded, " + std::to_string(over_budget) +
               " over budget";
  return o;
}

Outcome theorem2_dnf() {
  Outcome o;
  const std::vector<std::pair<std::size_t, std::size_t>> specs = {{3, 3}, {4, 3}, {5, 3}, {5, 4}};
  std::size_t checked = 0;
  for (const auto& [m, s] : specs) {
    const mc::CliqueSpec spec(m, s);
    std::vector<std::pair<std::string, mc::Circuit>> circuits;
    circuits.emplace_back("monotone", mc::build_monotone_dnf_circuit(spec));
    const std::size_t n = spec.num_vars();
    for (mc::VarIndex p = 0; p < n; ++p)
      circuits.emplace_back("shannon " + std::to_string(p),
                            mc::build_shannon_circuit(spec, std::vector<mc::VarIndex>{p}));
    for (mc::VarIndex p = 0; p + 1 < n; ++p)
      circuits.emplace_back("shannon " + std::to_string(p) + "," + std::to_string(p + 1),
                            mc::build_shannon_circuit(spec, std::vector<mc::VarIndex>{p, p + 1}));
    circuits.emplace_back("pon", mc::build_pon_circuit(spec));

    const auto canonical = mc::testing::clique_edge_sets(m, s);
    for (const auto& [label, c] : circuits) {
      const std::string where = "(" + std::to_string(m) + "," + std::to_string(s) + ") " + label;
      const mc::Dnf mono = mc::monotonize_dnf(mc::to_dnf(c));
      if (!mono.is_positive()) o.fail(where + ": negation left");
      if (!equivalent(mc::Evaluatable::of(mono), mc::Evaluatable::pointwise(n, [&](const mc::Assignment& a) {
            return mc::testing::has_clique_bitmask(m, s, a);
          })))
        o.fail(where + ": differs from the clique function");
      if (monomial_edge_sets(mono.absorbed()) != canonical) o.fail(where + ": not the canonical set");
      const mc::TheoremReport r = mc::check_theorem2(c, spec, mc::Mode::Dnf);
      if (r.verdict != mc::Verdict::Equivalent) o.fail(where + ": harness verdict");
      o.transcript += mc::format_theorem_report(r) + "\n";
      ++checked;
    }
    o.transcript += std::to_string(canonical.size()) + "\n";
  }
  const std::vector<std::size_t> expected = {1, 4, 10, 5};
  for (std::size_t i = 0; i < specs.size(); ++i)
    if (mc::testing::clique_edge_sets(specs[i].first, specs[i].second).size() != expected[i])
      o.fail("canonical count mismatch");
  if (o.pass) o.detail = std::to_string(checked) + " circuits";
  return o;
}

Outcome theorem1_refutation() {
  Outcome o;
  const mc::CliqueSpec spec(4, 3);
  const mc::TheoremReport r =
      mc::check_theorem1(mc::build_pon_circuit(spec), spec, 0, mc::Mode::Circuit);
  o.transcript = mc::format_theorem_report(r);
  if (r.verdict != mc::Verdict::Inequivalent) return o.fail("verdict not inequivalent"), o;
  if (!r.witness || r.witness->to_string() != "100000")
    return o.fail("witness " + (r.witness ? r.witness->to_string() : std::string("none"))), o;
  if (!r.contradictory_monomial) o.fail("contradictory monomial not flagged");
  if (r.value_after != true || r.oracle_value != false) o.fail("wrong direction at witness");
  if (r.proof_case != mc::ProofCase::POne) o.fail("case is not p1");
  if (mc::clique_oracle(spec, *r.witness)) o.fail("oracle accepts the witness");
  if (o.pass) o.detail = "witness 100000, case p1";
  return o;
}

Outcome dominance() {
  Outcome o;
  std::size_t pairs = 0;
  for (const mc::Circuit& raw : corpus()) {
    const mc::Circuit c = mc::standardize(raw);
    const mc::Evaluatable before = mc::Evaluatable::of(c);
    for (mc::VarIndex v = 0; v < c.num_vars(); ++v) {
      const mc::Circuit sub = mc::substitute_literal(c, v);
      const mc::Evaluatable after = mc::Evaluatable::of(sub);
      const auto dominated = mc::Evaluatable(c.num_vars(), [&](std::span<const std::uint64_t> w) {
        return before.eval_block(w) & ~after.eval_block(w);
      });
      const auto zero = mc::Evaluatable(c.num_vars(), [](std::span<const std::uint64_t>) {
        return std::uint64_t{0};
      });
      if (!equivalent(dominated, zero)) o.fail("output decreased: " + mc::serialize_netlist(c));
      ++pairs;
    }
  }

  // Theorem-1 failures from the counterexample search plus the Pon circuit.
  std::size_t failures = 0;
  const auto check_failure = [&](const mc::TheoremReport& r) {
    ++failures;
    if (r.value_after != true || r.oracle_value != false) o.fail("failure not one-sided");
  };
  for (std::size_t m : {4, 5}) {
    const mc::CliqueSpec spec(m, 3);
    mc::SearchOptions opt;
    opt.trials = 40;
    opt.depth = 3;
    opt.seed = 7;
    const mc::SearchResult r = mc::search_counterexample(spec, opt);
    for (const auto& f : r.failures) check_failure(f);
    o.transcript += mc::format_search_result(r, opt);
    const mc::Circuit pon = mc::build_pon_circuit(spec);
    for (mc::VarIndex v = 0; v < spec.num_vars(); ++v) {
      if (!mc::has_negated_input(pon, v)) continue;
      const auto t = mc::check_theorem1(pon, spec, v, mc::Mode::Circuit);
      if (t.verdict == mc::Verdict::Inequivalent) check_failure(t);
    }
  }
  if (failures == 0) o.fail("no theorem-1 failures to inspect");
  if (o.pass)
    o.detail = std::to_string(pairs) + " circuit/variable pairs, " + std::to_string(failures) +
               " one-sided failures";
  return o;
}

Outcome non_monotone_necessity() {
  Outcome o;
  const mc::Dnf not_x1 = mc::Dnf::from_monomials(1, {mc::Monomial{0, 1}});
  const mc::Dnf e = mc::eliminate_negation_dnf(not_x1, 0);
  if (e != mc::Dnf::constant(1, true)) o.fail("result is not constant 1: " + mc::format_dnf(e));
  const auto r = mc::equiv_exhaustive(mc::Evaluatable::of(e), mc::Evaluatable::of(not_x1));
  o.transcript = mc::format_equivalence_report(r);
  if (r.verdict() != mc::Verdict::Inequivalent) o.fail("harness reports equivalence");
  if (!r.witness() || r.witness()->to_string() != "1") o.fail("unexpected witness");
  if (o.pass) o.detail = "witness 1";
  return o;
}

Outcome oracle_correctness() {
  Outcome o;
  const std::vector<std::pair<std::size_t, std::size_t>> specs = {{3, 3}, {4, 3}, {4, 4},
                                                                  {5, 3}, {5, 4}, {6, 3}};
  for (const auto& [m, s] : specs) {
    const mc::CliqueSpec spec(m, s);
    const mc::Circuit c = mc::build_monotone_dnf_circuit(spec);
    const std::string where = "(" + std::to_string(m) + "," + std::to_string(s) + ")";
    mc::testing::for_each_assignment(spec.num_vars(), [&](const mc::Assignment& a) {
      const bool oracle = mc::clique_oracle(spec, a);
      if (oracle != mc::eval(c, a)) o.fail(where + " circuit differs at " + a.to_string());
      if (oracle != mc::testing::has_clique_bitmask(m, s, a))
        o.fail(where + " oracle differs from bitmask enumeration at " + a.to_string());
    });
    const auto mono = mc::is_monotone_semantic(mc::Evaluatable::oracle(spec));
    if (!mono.monotone) o.fail(where + " oracle not monotone");
    o.transcript += where + " " + std::to_string(mc::size(c)) + "\n";
  }
  if (o.pass) o.detail = "6 specs";
  return o;
}

Outcome blowup() {
  Outcome o;
  const std::vector<std::size_t> pivots = {0, 1, 2};
  const auto rows = mc::blowup_report(4, 8, 3, pivots);
  o.transcript = mc::format_blowup_csv(rows);
  const std::vector<std::uint64_t> expected = {4, 10, 20, 35, 56};
  if (rows.size() != expected.size() * pivots.size()) return o.fail("row count"), o;
  for (const mc::BlowupRow& row : rows) {
    const std::uint64_t want = expected[row.m - 4];
    std::uint64_t recomputed = 1;
    for (std::size_t i = 0; i < 3; ++i) recomputed = recomputed * (row.m - i) / (i + 1);
    if (row.canonical_count != want || recomputed != want)
      o.fail("canonical count at m=" + std::to_string(row.m));
    if (row.monotone_monomials && *row.monotone_monomials != want)
      o.fail("monotone monomial count at m=" + std::to_string(row.m));
    const mc::CliqueSpec spec(row.m, 3);
    std::vector<mc::VarIndex> p;
    for (std::size_t k = 0; k < row.pivots; ++k) p.push_back(static_cast<mc::VarIndex>(k));
    if (row.gates != mc::size(mc::build_shannon_circuit(spec, p)))
      o.fail("gate count at m=" + std::to_string(row.m));
    if (row.pivots == 0 && row.gates != 3 * want - 1)
      o.fail("monotone gate count at m=" + std::to_string(row.m));
  }
  if (o.pass) {
    std::ostringstream d;
    for (const auto& row : rows)
      if (row.pivots == 2) d << "m=" << row.m << ":" << row.gates << "g ";
    o.detail = d.str() + "(2 pivots)";
  }
  return o;
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  std::vector<Criterion> criteria = {
      {1, "standardization soundness", 60, standardization},
      {2, "dnf soundness", 60, dnf_soundness},
      {3, "theorem 2 at dnf level", 30, theorem2_dnf},
      {4, "theorem 1 refuted at circuit level", 1, theorem1_refutation},
      {5, "dominance one-sidedness", 300, dominance},
      {6, "non-monotone necessity", 1, non_monotone_necessity},
      {7, "oracle correctness", 60, oracle_correctness},
      {8, "blow-up measurement", 300, blowup},
  };

  bool all = true;
  std::vector<std::string> transcripts;
  for (const Criterion& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (secs > c.limit_seconds) o.fail("took too long");
    all = all && o.pass;
    transcripts.push_back(o.transcript);
    std::printf("%s %d %s (%.2fs, limit %.0fs): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs,
                c.limit_seconds, o.detail.c_str());
    std::fflush(stdout);
  }

  const auto start = Clock::now();
  std::string mismatched;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception&) {
    }
    if (o.transcript != transcripts[i] || o.transcript.empty())
      mismatched += std::to_string(criteria[i].id) + " ";
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  const bool det = mismatched.empty();
  all = all && det;
  std::printf("%s 9 determinism (%.2fs): %s\n", det ? "PASS" : "FAIL", secs,
              det ? "all reports byte-identical on rerun" : ("differs: " + mismatched).c_str());
  return all ? 0 : 1;
}
