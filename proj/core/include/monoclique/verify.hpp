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


#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monoclique/circuit.hpp"
#include "monoclique/clique.hpp"
#include "monoclique/dnf.hpp"

namespace monoclique {

inline constexpr std::size_t kDefaultGuard = 20;
inline constexpr std::size_t kMaxGuard = 24;

/// Exhaustive sweep limit was exceeded.
class GuardExceeded : public std::runtime_error {
 public:
  GuardExceeded(std::size_t n, std::size_t guard)
      : std::runtime_error("exhaustive check over " + std::to_string(n) +
                           " variables exceeds guard " + std::to_string(guard)),
        n_(n),
        guard_(guard) {}
  std::size_t num_vars() const { return n_; }
  std::size_t guard() const { return guard_; }

 private:
  std::size_t n_;
  std::size_t guard_;
};

/// Input to a theorem harness is unusable (not standard, wrong arity, or not
/// a clique circuit).
class TheoremError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepConfig {
  std::size_t guard = kDefaultGuard;
  unsigned threads = 1;
};

/// Type-erased Boolean function of a fixed arity, evaluated 64 assignments
/// at a time (see eval_block in circuit.hpp for the lane layout).
class Evaluatable {
 public:
  using BlockFn = std::function<std::uint64_t(std::span<const std::uint64_t>)>;

  Evaluatable(std::size_t num_vars, BlockFn fn, std::optional<std::size_t> size = std::nullopt)
      : num_vars_(num_vars), fn_(std::move(fn)), size_(size) {}

  /// Gate count is recorded as the size.
  static Evaluatable of(const Circuit& c);
  /// Monomial count is recorded as the size.
  static Evaluatable of(const Dnf& d);
  static Evaluatable oracle(const CliqueSpec& spec);
  /// Wraps a scalar predicate; evaluated lane by lane.
  static Evaluatable pointwise(std::size_t num_vars, std::function<bool(const Assignment&)> fn);

  std::size_t num_vars() const { return num_vars_; }
  std::optional<std::size_t> size() const { return size_; }
  std::uint64_t eval_block(std::span<const std::uint64_t> var_words) const {
    return fn_(var_words);
  }
  bool eval(const Assignment& a) const;

 private:
  std::size_t num_vars_;
  BlockFn fn_;
  std::optional<std::size_t> size_;
};

/// Variable words for the 64 assignments starting at lexicographic index
/// `base` (a multiple of 64), and the mask of lanes that exist.
void block_words(std::size_t n, std::uint64_t base, std::vector<std::uint64_t>& words);
std::uint64_t lane_mask(std::size_t n);

enum class Verdict { Equivalent, Inequivalent, BudgetExceeded };
std::string_view verdict_name(Verdict v);

/// Result of an exhaustive comparison. A witness exists exactly when the
/// verdict is Inequivalent, and it is re-checked against both functions when
/// the report is built.
class EquivalenceReport {
 public:
  static EquivalenceReport equivalent(std::uint64_t checked, std::optional<std::size_t> size_f,
                                      std::optional<std::size_t> size_g);
  static EquivalenceReport inequivalent(const Evaluatable& f, const Evaluatable& g,
                                        Assignment witness, std::uint64_t checked);
  static EquivalenceReport budget_exceeded(std::optional<std::size_t> size_f,
                                           std::optional<std::size_t> size_g);

  Verdict verdict() const { return verdict_; }
  const std::optional<Assignment>& witness() const { return witness_; }
  /// Assignments examined in lexicographic order, up to and including the
  /// witness when there is one.
  std::uint64_t checked() const { return checked_; }
  std::optional<std::size_t> size_f() const { return size_f_; }
  std::optional<std::size_t> size_g() const { return size_g_; }

 private:
  EquivalenceReport() = default;

  Verdict verdict_ = Verdict::Equivalent;
  std::optional<Assignment> witness_;
  std::uint64_t checked_ = 0;
  std::optional<std::size_t> size_f_;
  std::optional<std::size_t> size_g_;
};

/// Compares f and g on all 2^n assignments; the witness is the
/// lexicographically first mismatch regardless of thread count. Returns a
/// BudgetExceeded report when n is above the guard.
EquivalenceReport equiv_exhaustive(const Evaluatable& f, const Evaluatable& g,
                                   const SweepConfig& config = {});

struct MonotonicityResult {
  bool monotone = true;
  /// First (a, a') with a' = a plus one 0->1 flip and f(a) > f(a'), ordered
  /// by a then by the flipped position.
  std::optional<std::pair<Assignment, Assignment>> violation;
};

/// Single-flip sweep; throws GuardExceeded above the guard.
MonotonicityResult is_monotone_semantic(const Evaluatable& f, const SweepConfig& config = {});

enum class Mode { Circuit, Dnf };
std::string_view mode_name(Mode m);

/// Proof case of the failing substitution at the witness, read off the split
/// (~x & p) | rest of the circuit the substitution was applied to.
enum class ProofCase { None, PZero, POne, Unknown };
std::string_view proof_case_name(ProofCase c);

struct TheoremConfig {
  SweepConfig sweep;
  std::size_t dnf_budget = kDefaultDnfBudget;
};

struct TheoremReport {
  int theorem = 1;
  CliqueSpec spec{1, 1};
  Mode mode = Mode::Circuit;
  /// Variables whose negated inputs were replaced, ascending.
  std::vector<VarIndex> substituted;
  Verdict verdict = Verdict::Equivalent;
  std::optional<Assignment> witness;
  std::uint64_t checked = 0;

  // At the witness, when there is one.
  std::optional<bool> value_after;
  std::optional<bool> oracle_value;
  /// Variable whose substitution first changed the value at the witness.
  std::optional<VarIndex> failing_var;
  std::optional<bool> p_at_witness;
  ProofCase proof_case = ProofCase::None;
  /// The expansion of the input, before contradiction elimination, holds a
  /// monomial with both x and ~x for a substituted variable.
  bool contradictory_monomial = false;

  std::size_t size_before = 0;
  std::size_t size_after = 0;
  /// nullopt when the DNF budget was exceeded.
  std::optional<std::size_t> dnf_monomials_before;
  std::optional<std::size_t> dnf_monomials_after;

  std::optional<std::uint64_t> seed;

  bool size_not_increased() const { return size_after <= size_before; }
};

/// Replace ~var by 1 (circuit mode: substitute_literal; dnf mode: to_dnf +
/// eliminate_negation_dnf) and compare with the oracle. `c` must be standard
/// and oracle-equivalent; otherwise TheoremError.
TheoremReport check_theorem1(const Circuit& c, const CliqueSpec& spec, VarIndex var, Mode mode,
                             const TheoremConfig& config = {});

/// Replace every negated input by 1 and compare with the oracle. In dnf mode
/// size_after is the gate count of the two-level circuit for the monotone
/// DNF.
TheoremReport check_theorem2(const Circuit& c, const CliqueSpec& spec, Mode mode,
                             const TheoremConfig& config = {});

enum Rewrite : unsigned {
  kRewriteDoubleNegation = 1u << 0,
  kRewriteShannon = 1u << 1,
  kRewriteSwap = 1u << 2,
  kRewriteContradiction = 1u << 3,
  kRewriteAll = 0xfu,
};

/// Parses a comma-separated list of `dn`, `shannon`, `swap`, `contra`, `all`.
unsigned parse_rewrites(std::string_view text);

struct SearchOptions {
  std::size_t depth = 3;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  unsigned rewrites = kRewriteAll;
  TheoremConfig config;
};

struct SearchResult {
  std::size_t trials = 0;
  /// check_theorem1 runs (one per trial and negated variable).
  std::size_t checks = 0;
  std::vector<TheoremReport> failures;
};

/// Trial circuit for one derived seed: an oracle-equivalent base circuit
/// (monotone or Shannon with one or two random pivots) with `depth`
/// semantics-preserving rewrites applied. Deterministic in its arguments.
Circuit search_trial_circuit(const CliqueSpec& spec, std::uint64_t trial_seed, std::size_t depth,
                             unsigned rewrites);

/// Runs check_theorem1 in circuit mode on every negated variable of every
/// trial circuit; returns the failures with their trial seeds.
SearchResult search_counterexample(const CliqueSpec& spec, const SearchOptions& options);

struct BlowupRow {
  std::size_t m = 0;
  std::size_t s = 0;
  std::size_t pivots = 0;
  std::size_t gates = 0;
  /// nullopt when the DNF budget was exceeded.
  std::optional<std::size_t> dnf_monomials;
  std::optional<std::size_t> monotone_monomials;
  std::uint64_t canonical_count = 0;
};

/// One row per (m, pivot count) for m in [m_lo, m_hi]. Pivots are the first
/// k edge variables.
std::vector<BlowupRow> blowup_report(std::size_t m_lo, std::size_t m_hi, std::size_t s,
                                     std::span<const std::size_t> pivot_counts,
                                     std::size_t dnf_budget = kDefaultDnfBudget);

}  // namespace monoclique
