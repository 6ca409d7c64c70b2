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


#include "monoclique/verify.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <thread>

#include "monoclique/passes.hpp"
#include "monoclique/random.hpp"

namespace monoclique {
namespace {

constexpr std::uint64_t kLanePattern[6] = {
    0xAAAAAAAAAAAAAAAAULL, 0xCCCCCCCCCCCCCCCCULL, 0xF0F0F0F0F0F0F0F0ULL,
    0xFF00FF00FF00FF00ULL, 0xFFFF0000FFFF0000ULL, 0xFFFFFFFF00000000ULL,
};

constexpr std::uint64_t kNoHit = std::numeric_limits<std::uint64_t>::max();

std::size_t effective_guard(const SweepConfig& config) {
  if (config.guard > kMaxGuard) {
    throw std::invalid_argument("exhaustive guard " + std::to_string(config.guard) +
                                " is above the hard limit " + std::to_string(kMaxGuard));
  }
  return config.guard;
}

// Smallest assignment index at which `hits(words)` has a lane set. `hits`
// must be callable concurrently and must already be masked to valid lanes.
template <typename Hits>
std::uint64_t first_hit(std::size_t n, unsigned threads, const Hits& hits) {
  const std::uint64_t blocks = n >= 6 ? (std::uint64_t{1} << (n - 6)) : 1;
  std::atomic<std::uint64_t> best{kNoHit};

  auto sweep = [&](std::uint64_t first, std::uint64_t last) {
    std::vector<std::uint64_t> words;
    for (std::uint64_t blk = first; blk < last; ++blk) {
      const std::uint64_t base = blk * 64;
      if (base >= best.load(std::memory_order_relaxed)) return;
      block_words(n, base, words);
      const std::uint64_t mask = hits(std::span<const std::uint64_t>(words));
      if (mask) {
        const std::uint64_t index = base + static_cast<std::uint64_t>(std::countr_zero(mask));
        std::uint64_t cur = best.load(std::memory_order_relaxed);
        while (index < cur && !best.compare_exchange_weak(cur, index)) {
        }
        return;
      }
    }
  };

  const std::uint64_t workers = std::clamp<std::uint64_t>(threads, 1, blocks);
  if (workers == 1) {
    sweep(0, blocks);
  } else {
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (blocks + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t lo = w * chunk;
      const std::uint64_t hi = std::min(blocks, lo + chunk);
      if (lo < hi) pool.emplace_back(sweep, lo, hi);
    }
  }
  return best.load();
}

Assignment lane_assignment(std::span<const std::uint64_t> words, unsigned lane) {
  Assignment a(words.size());
  for (std::size_t j = 0; j < words.size(); ++j) a.set(j, (words[j] >> lane) & 1u);
  return a;
}

std::uint64_t total_assignments(std::size_t n) { return std::uint64_t{1} << n; }

}  // namespace

void block_words(std::size_t n, std::uint64_t base, std::vector<std::uint64_t>& words) {
  words.assign(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t bit = n - 1 - j;
    if (bit < 6) {
      words[j] = kLanePattern[bit];
    } else {
      words[j] = ((base >> bit) & 1u) ? ~std::uint64_t{0} : 0;
    }
  }
}

std::uint64_t lane_mask(std::size_t n) {
  return n >= 6 ? ~std::uint64_t{0} : (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
}

Evaluatable Evaluatable::of(const Circuit& c) {
  require_valid(c);
  auto shared = std::make_shared<const Circuit>(c);
  return Evaluatable(
      c.num_vars(),
      [shared](std::span<const std::uint64_t> words) {
        thread_local std::vector<std::uint64_t> scratch;
        return monoclique::eval_block(*shared, words, scratch);
      },
      monoclique::size(c));
}

Evaluatable Evaluatable::of(const Dnf& d) {
  auto shared = std::make_shared<const Dnf>(d);
  return Evaluatable(
      d.num_vars(),
      [shared](std::span<const std::uint64_t> words) { return eval_dnf_block(*shared, words); },
      d.size());
}

Evaluatable Evaluatable::oracle(const CliqueSpec& spec) {
  return pointwise(spec.num_vars(),
                   [spec](const Assignment& a) { return clique_oracle(spec, a); });
}

Evaluatable Evaluatable::pointwise(std::size_t num_vars,
                                   std::function<bool(const Assignment&)> fn) {
  return Evaluatable(num_vars, [num_vars, fn = std::move(fn)](std::span<const std::uint64_t> words) {
    std::uint64_t out = 0;
    const std::uint64_t lanes = lane_mask(num_vars);
    for (unsigned lane = 0; lane < 64; ++lane) {
      if (!((lanes >> lane) & 1u)) break;
      if (fn(lane_assignment(words, lane))) out |= std::uint64_t{1} << lane;
    }
    return out;
  });
}

bool Evaluatable::eval(const Assignment& a) const {
  if (a.size() != num_vars_) throw std::invalid_argument("assignment length mismatch");
  std::vector<std::uint64_t> words(num_vars_);
  for (std::size_t j = 0; j < num_vars_; ++j) words[j] = a[j] ? ~std::uint64_t{0} : 0;
  return (fn_(words) & 1u) != 0;
}

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Equivalent:
      return "equivalent";
    case Verdict::Inequivalent:
      return "inequivalent";
    case Verdict::BudgetExceeded:
      return "budget-exceeded";
  }
  return "?";
}

EquivalenceReport EquivalenceReport::equivalent(std::uint64_t checked,
                                                std::optional<std::size_t> size_f,
                                                std::optional<std::size_t> size_g) {
  EquivalenceReport r;
  r.verdict_ = Verdict::Equivalent;
  r.checked_ = checked;
  r.size_f_ = size_f;
  r.size_g_ = size_g;
  return r;
}

EquivalenceReport EquivalenceReport::inequivalent(const Evaluatable& f, const Evaluatable& g,
                                                  Assignment witness, std::uint64_t checked) {
  if (f.eval(witness) == g.eval(witness)) {
    throw std::logic_error("witness " + witness.to_string() + " does not distinguish");
  }
  EquivalenceReport r;
  r.verdict_ = Verdict::Inequivalent;
  r.witness_ = std::move(witness);
  r.checked_ = checked;
  r.size_f_ = f.size();
  r.size_g_ = g.size();
  return r;
}

EquivalenceReport EquivalenceReport::budget_exceeded(std::optional<std::size_t> size_f,
                                                     std::optional<std::size_t> size_g) {
  EquivalenceReport r;
  r.verdict_ = Verdict::BudgetExceeded;
  r.size_f_ = size_f;
  r.size_g_ = size_g;
  return r;
}

EquivalenceReport equiv_exhaustive(const Evaluatable& f, const Evaluatable& g,
                                   const SweepConfig& config) {
  if (f.num_vars() != g.num_vars()) {
    throw std::invalid_argument("cannot compare functions of " + std::to_string(f.num_vars()) +
                                " and " + std::to_string(g.num_vars()) + " variables");
  }
  const std::size_t n = f.num_vars();
  if (n > effective_guard(config)) return EquivalenceReport::budget_exceeded(f.size(), g.size());

  const std::uint64_t lanes = lane_mask(n);
  const std::uint64_t hit = first_hit(n, config.threads, [&](std::span<const std::uint64_t> w) {
    return (f.eval_block(w) ^ g.eval_block(w)) & lanes;
  });
  if (hit == kNoHit) return EquivalenceReport::equivalent(total_assignments(n), f.size(), g.size());
  return EquivalenceReport::inequivalent(f, g, Assignment::from_index(hit, n), hit + 1);
}

MonotonicityResult is_monotone_semantic(const Evaluatable& f, const SweepConfig& config) {
  const std::size_t n = f.num_vars();
  if (n > effective_guard(config)) throw GuardExceeded(n, config.guard);
  const std::uint64_t lanes = lane_mask(n);

  // Violation lanes for flipping variable j: a[j] = 0, f(a) = 1, f(a | e_j) = 0.
  auto violations = [&](std::span<const std::uint64_t> w, std::size_t j) {
    std::vector<std::uint64_t> raised(w.begin(), w.end());
    raised[j] = ~std::uint64_t{0};
    return f.eval_block(w) & ~f.eval_block(raised) & ~w[j] & lanes;
  };

  const std::uint64_t hit = first_hit(n, config.threads, [&](std::span<const std::uint64_t> w) {
    std::uint64_t any = 0;
    for (std::size_t j = 0; j < n; ++j) any |= violations(w, j);
    return any;
  });
  if (hit == kNoHit) return {};

  std::vector<std::uint64_t> words;
  block_words(n, hit & ~std::uint64_t{63}, words);
  const auto lane = static_cast<unsigned>(hit & 63u);
  for (std::size_t j = 0; j < n; ++j) {
    if ((violations(words, j) >> lane) & 1u) {
      Assignment a = Assignment::from_index(hit, n);
      Assignment raised = a;
      raised.set(j, true);
      return {false, std::make_pair(std::move(a), std::move(raised))};
    }
  }
  throw std::logic_error("monotonicity sweep lost its violation");
}

std::string_view mode_name(Mode m) { return m == Mode::Circuit ? "circuit" : "dnf"; }

std::string_view proof_case_name(ProofCase c) {
  switch (c) {
    case ProofCase::None:
      return "none";
    case ProofCase::PZero:
      return "p0";
    case ProofCase::POne:
      return "p1";
    case ProofCase::Unknown:
      return "unknown";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Theorem harnesses

namespace {

void require_clique_circuit(const Circuit& c, const CliqueSpec& spec, const Evaluatable& oracle,
                            const SweepConfig& sweep) {
  if (auto d = validate(c)) throw TheoremError("invalid circuit: " + d->to_string());
  if (!is_standard(c)) throw TheoremError("input circuit is not standard (contains NOT gates)");
  if (c.num_vars() != spec.num_vars()) {
    throw TheoremError("circuit has " + std::to_string(c.num_vars()) + " inputs, CLIQUE(" +
                       std::to_string(spec.m()) + "," + std::to_string(spec.s()) + ") has " +
                       std::to_string(spec.num_vars()));
  }
  const auto pre = equiv_exhaustive(Evaluatable::of(c), oracle, sweep);
  if (pre.verdict() == Verdict::BudgetExceeded) throw GuardExceeded(c.num_vars(), sweep.guard);
  if (pre.verdict() == Verdict::Inequivalent) {
    throw TheoremError("input is not a clique circuit: differs from the oracle at " +
                       pre.witness()->to_string());
  }
}

std::optional<std::size_t> dnf_count(const Circuit& c, std::size_t budget) {
  try {
    return to_dnf(c, {budget}).size();
  } catch (const DnfBudgetExceeded&) {
    return std::nullopt;
  }
}

std::optional<std::vector<Monomial>> raw_expansion(const Circuit& c, std::size_t budget) {
  try {
    return expand_keeping_contradictions(c, {budget});
  } catch (const DnfBudgetExceeded&) {
    return std::nullopt;
  }
}

bool contradicts_on(std::span<const Monomial> monomials, VarIndex var) {
  const std::uint64_t bit = std::uint64_t{1} << var;
  return std::any_of(monomials.begin(), monomials.end(),
                     [&](const Monomial& m) { return (m.pos & m.neg & bit) != 0; });
}

void classify(TheoremReport& r, std::span<const Monomial> monomials, VarIndex var) {
  const RawSplit split = split_on_negation(monomials, var);
  const bool p = std::any_of(split.p.begin(), split.p.end(),
                             [&](const Monomial& m) { return m.eval(*r.witness); });
  r.p_at_witness = p;
  r.proof_case = p ? ProofCase::POne : ProofCase::PZero;
}

void record_comparison(TheoremReport& r, const EquivalenceReport& eq, const Evaluatable& after,
                       const Evaluatable& oracle) {
  r.verdict = eq.verdict();
  r.checked = eq.checked();
  if (eq.witness()) {
    r.witness = eq.witness();
    r.value_after = after.eval(*r.witness);
    r.oracle_value = oracle.eval(*r.witness);
  }
}

TheoremReport base_report(int theorem, const CliqueSpec& spec, Mode mode, const Circuit& c) {
  TheoremReport r;
  r.theorem = theorem;
  r.spec = spec;
  r.mode = mode;
  r.size_before = size(c);
  return r;
}

}  // namespace

TheoremReport check_theorem1(const Circuit& c, const CliqueSpec& spec, VarIndex var, Mode mode,
                             const TheoremConfig& config) {
  const Evaluatable oracle = Evaluatable::oracle(spec);
  require_clique_circuit(c, spec, oracle, config.sweep);
  if (var >= c.num_vars()) throw TheoremError("variable out of range: " + std::to_string(var));

  TheoremReport r = base_report(1, spec, mode, c);
  r.substituted = {var};
  const auto raw = raw_expansion(c, config.dnf_budget);
  r.contradictory_monomial = raw && contradicts_on(*raw, var);

  if (mode == Mode::Circuit) {
    const Circuit after = substitute_literal(c, var);
    r.size_after = size(after);
    r.dnf_monomials_before = dnf_count(c, config.dnf_budget);
    r.dnf_monomials_after = dnf_count(after, config.dnf_budget);
    const Evaluatable f = Evaluatable::of(after);
    record_comparison(r, equiv_exhaustive(f, oracle, config.sweep), f, oracle);
    if (r.witness) {
      r.failing_var = var;
      if (raw) {
        classify(r, *raw, var);
      } else {
        r.proof_case = ProofCase::Unknown;
      }
    }
    return r;
  }

  Dnf d;
  try {
    d = to_dnf(c, {config.dnf_budget});
  } catch (const DnfBudgetExceeded&) {
    r.verdict = Verdict::BudgetExceeded;
    return r;
  }
  const Dnf after = eliminate_negation_dnf(d, var);
  r.size_after = size(to_circuit(after));
  r.dnf_monomials_before = d.size();
  r.dnf_monomials_after = after.size();
  const Evaluatable f = Evaluatable::of(after);
  record_comparison(r, equiv_exhaustive(f, oracle, config.sweep), f, oracle);
  if (r.witness) {
    r.failing_var = var;
    classify(r, d.monomials(), var);
  }
  return r;
}

TheoremReport check_theorem2(const Circuit& c, const CliqueSpec& spec, Mode mode,
                             const TheoremConfig& config) {
  const Evaluatable oracle = Evaluatable::oracle(spec);
  require_clique_circuit(c, spec, oracle, config.sweep);

  TheoremReport r = base_report(2, spec, mode, c);
  const auto raw = raw_expansion(c, config.dnf_budget);

  if (mode == Mode::Circuit) {
    // Replay monotonize_circuit_level step by step so a failure can be
    // attributed to the substitution that introduced it.
    std::vector<Circuit> before_step;
    Circuit current = prune(c);
    for (VarIndex v = 0; v < c.num_vars(); ++v) {
      if (!has_negated_input(current, v)) continue;
      r.substituted.push_back(v);
      before_step.push_back(current);
      current = substitute_literal(current, v);
    }
    r.size_after = size(current);
    r.dnf_monomials_before = dnf_count(c, config.dnf_budget);
    r.dnf_monomials_after = dnf_count(current, config.dnf_budget);
    for (VarIndex v : r.substituted)
      if (raw && contradicts_on(*raw, v)) r.contradictory_monomial = true;

    const Evaluatable f = Evaluatable::of(current);
    record_comparison(r, equiv_exhaustive(f, oracle, config.sweep), f, oracle);
    if (r.witness) {
      const bool want = *r.oracle_value;
      for (std::size_t k = 0; k < r.substituted.size(); ++k) {
        const Circuit step = substitute_literal(before_step[k], r.substituted[k]);
        if (eval(step, *r.witness) != want) {
          r.failing_var = r.substituted[k];
          if (auto step_raw = raw_expansion(before_step[k], config.dnf_budget)) {
            classify(r, *step_raw, r.substituted[k]);
          } else {
            r.proof_case = ProofCase::Unknown;
          }
          break;
        }
      }
    }
    return r;
  }

  Dnf d;
  try {
    d = to_dnf(c, {config.dnf_budget});
  } catch (const DnfBudgetExceeded&) {
    r.verdict = Verdict::BudgetExceeded;
    return r;
  }
  std::vector<Dnf> before_step;
  Dnf current = d;
  for (VarIndex v = 0; v < d.num_vars(); ++v) {
    if (!current.mentions_negation(v)) continue;
    r.substituted.push_back(v);
    before_step.push_back(current);
    current = eliminate_negation_dnf(current, v);
  }
  r.size_after = size(to_circuit(current));
  r.dnf_monomials_before = d.size();
  r.dnf_monomials_after = current.size();
  for (VarIndex v : r.substituted)
    if (raw && contradicts_on(*raw, v)) r.contradictory_monomial = true;

  const Evaluatable f = Evaluatable::of(current);
  record_comparison(r, equiv_exhaustive(f, oracle, config.sweep), f, oracle);
  if (r.witness) {
    const bool want = *r.oracle_value;
    for (std::size_t k = 0; k < r.substituted.size(); ++k) {
      const Dnf step = eliminate_negation_dnf(before_step[k], r.substituted[k]);
      if (eval_dnf(step, *r.witness) != want) {
        r.failing_var = r.substituted[k];
        classify(r, before_step[k].monomials(), r.substituted[k]);
        break;
      }
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Counterexample search

unsigned parse_rewrites(std::string_view text) {
  unsigned out = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view item = text.substr(pos, end - pos);
    if (item == "dn") {
      out |= kRewriteDoubleNegation;
    } else if (item == "shannon") {
      out |= kRewriteShannon;
    } else if (item == "swap") {
      out |= kRewriteSwap;
    } else if (item == "contra") {
      out |= kRewriteContradiction;
    } else if (item == "all") {
      out |= kRewriteAll;
    } else {
      throw std::invalid_argument("unknown rewrite '" + std::string(item) + "'");
    }
    pos = end + 1;
  }
  if (out == 0) throw std::invalid_argument("empty rewrite set");
  return out;
}

namespace {

// Rebuilds `c`, applying `kind` at node `target`. Returns the raw circuit;
// callers restandardize or prune.
Circuit rewrite_at(const Circuit& c, Rewrite kind, NodeId target, VarIndex y) {
  std::vector<Node> out;
  std::vector<NodeId> map(c.node_count());
  auto push = [&](Node n) {
    out.push_back(n);
    return static_cast<NodeId>(out.size() - 1);
  };
  const auto nodes = c.nodes();
  for (NodeId i = 0; i < nodes.size(); ++i) {
    Node n = nodes[i];
    if (n.arity() >= 1) n.a = map[n.a];
    if (n.arity() == 2) n.b = map[n.b];
    if (i == target && kind == kRewriteSwap) std::swap(n.a, n.b);
    NodeId x = push(n);
    if (i == target) {
      switch (kind) {
        case kRewriteDoubleNegation:
          x = push(Node::not_of(push(Node::not_of(x))));
          break;
        case kRewriteShannon: {
          // x -> (x & y) | (x & ~y)
          const NodeId pos = push(Node::and_of(x, push(Node::input(y))));
          const NodeId neg = push(Node::and_of(x, push(Node::neg_input(y))));
          x = push(Node::or_of(pos, neg));
          break;
        }
        case kRewriteContradiction: {
          // x -> x | (~y & y)
          const NodeId neg = push(Node::neg_input(y));
          const NodeId zero = push(Node::and_of(neg, push(Node::input(y))));
          x = push(Node::or_of(x, zero));
          break;
        }
        default:
          break;
      }
    }
    map[i] = x;
  }
  return Circuit(c.num_vars(), std::move(out), map[c.output()]);
}

Circuit apply_random_rewrite(const Circuit& c, unsigned rewrites, Rng& rng) {
  std::vector<Rewrite> enabled;
  for (Rewrite r : {kRewriteDoubleNegation, kRewriteShannon, kRewriteSwap, kRewriteContradiction})
    if (rewrites & r) enabled.push_back(r);
  const Rewrite kind = enabled[uniform_below(rng, enabled.size())];
  const auto y = static_cast<VarIndex>(uniform_below(rng, c.num_vars()));

  std::vector<NodeId> targets;
  for (NodeId i = 0; i < c.node_count(); ++i) {
    const Op op = c.node(i).op;
    if (kind != kRewriteSwap || op == Op::And || op == Op::Or) targets.push_back(i);
  }
  if (targets.empty()) return c;
  const NodeId target = targets[uniform_below(rng, targets.size())];

  Circuit next = rewrite_at(c, kind, target, y);
  return kind == kRewriteDoubleNegation ? standardize(next) : prune(next);
}

}  // namespace

Circuit search_trial_circuit(const CliqueSpec& spec, std::uint64_t trial_seed, std::size_t depth,
                             unsigned rewrites) {
  if ((rewrites & kRewriteAll) == 0) throw std::invalid_argument("empty rewrite set");
  const std::size_t n = spec.num_vars();
  if (n == 0) throw std::invalid_argument("search needs at least one edge variable");
  Rng rng(trial_seed);

  // Base: monotone, or Shannon with one or two pivots.
  const std::uint64_t kind = uniform_below(rng, n >= 2 ? 3 : 2);
  std::vector<VarIndex> pivots;
  while (pivots.size() < kind) {
    const auto p = static_cast<VarIndex>(uniform_below(rng, n));
    if (std::find(pivots.begin(), pivots.end(), p) == pivots.end()) pivots.push_back(p);
  }
  Circuit c = build_shannon_circuit(spec, pivots);
  for (std::size_t d = 0; d < depth; ++d) c = apply_random_rewrite(c, rewrites, rng);
  return c;
}

SearchResult search_counterexample(const CliqueSpec& spec, const SearchOptions& options) {
  const std::size_t n = spec.num_vars();
  if (n > effective_guard(options.config.sweep)) throw GuardExceeded(n, options.config.sweep.guard);
  const Evaluatable oracle = Evaluatable::oracle(spec);

  SearchResult result;
  for (std::size_t t = 0; t < options.trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(options.seed, t);
    const Circuit c = search_trial_circuit(spec, trial_seed, options.depth, options.rewrites);
    const auto eq = equiv_exhaustive(Evaluatable::of(c), oracle, options.config.sweep);
    if (eq.verdict() != Verdict::Equivalent) {
      throw std::logic_error("rewrite changed the function (trial seed " +
                             std::to_string(trial_seed) + ")");
    }
    ++result.trials;
    for (VarIndex v = 0; v < n; ++v) {
      if (!has_negated_input(c, v)) continue;
      ++result.checks;
      TheoremReport r = check_theorem1(c, spec, v, Mode::Circuit, options.config);
      if (r.verdict == Verdict::Inequivalent) {
        r.seed = trial_seed;
        result.failures.push_back(std::move(r));
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

std::vector<BlowupRow> blowup_report(std::size_t m_lo, std::size_t m_hi, std::size_t s,
                                     std::span<const std::size_t> pivot_counts,
                                     std::size_t dnf_budget) {
  std::vector<BlowupRow> rows;
  for (std::size_t m = m_lo; m <= m_hi; ++m) {
    const CliqueSpec spec(m, s);
    for (std::size_t k : pivot_counts) {
      if (k > spec.num_vars()) {
        throw std::invalid_argument("pivot count " + std::to_string(k) + " exceeds " +
                                    std::to_string(spec.num_vars()) + " edges");
      }
      std::vector<VarIndex> pivots(k);
      for (std::size_t i = 0; i < k; ++i) pivots[i] = static_cast<VarIndex>(i);
      const Circuit c = build_shannon_circuit(spec, pivots);

      BlowupRow row;
      row.m = m;
      row.s = s;
      row.pivots = k;
      row.gates = size(c);
      row.canonical_count = binomial(m, s);
      try {
        const Dnf d = to_dnf(c, {dnf_budget});
        row.dnf_monomials = d.size();
        row.monotone_monomials = monotonize_dnf(d).size();
      } catch (const DnfBudgetExceeded&) {
      }
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace monoclique
