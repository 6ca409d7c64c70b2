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


#include "monoclique/dnf.hpp"

#include <algorithm>
#include <sstream>

namespace monoclique {
namespace {

std::uint64_t var_bit(VarIndex var) { return std::uint64_t{1} << var; }

void check_var_count(std::size_t n) {
  if (n > kMaxDnfVars) {
    throw DnfError("DNF supports at most " + std::to_string(kMaxDnfVars) + " variables, got " +
                   std::to_string(n));
  }
}

std::uint64_t var_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Per-node monomial lists for a standard circuit. `keep_contradictions`
// controls whether ~x & x products survive.
std::vector<Monomial> expand(const Circuit& c, const DnfOptions& options,
                             bool keep_contradictions) {
  require_valid(c);
  if (!is_standard(c)) throw DnfError("to_dnf requires a standard circuit (no NOT gates)");
  check_var_count(c.num_vars());

  const Circuit live = prune(c);
  const auto nodes = live.nodes();

  // Remaining consumers per node; lists are released once fully consumed.
  std::vector<std::size_t> uses(nodes.size(), 0);
  for (const Node& n : nodes) {
    if (n.arity() >= 1) ++uses[n.a];
    if (n.arity() == 2) ++uses[n.b];
  }
  ++uses[live.output()];

  std::vector<std::vector<Monomial>> terms(nodes.size());
  auto release = [&](NodeId id) {
    if (--uses[id] == 0) std::vector<Monomial>().swap(terms[id]);
  };

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& n = nodes[i];
    std::vector<Monomial>& out = terms[i];
    switch (n.op) {
      case Op::Input:
        out.push_back({var_bit(n.a), 0});
        break;
      case Op::NegInput:
        out.push_back({0, var_bit(n.a)});
        break;
      case Op::Const:
        if (n.a) out.push_back({});
        break;
      case Op::Not:
        throw DnfError("to_dnf requires a standard circuit (no NOT gates)");
      case Op::Or: {
        const auto& l = terms[n.a];
        const auto& r = terms[n.b];
        const std::size_t raw = l.size() + r.size();
        if (raw > options.budget) throw DnfBudgetExceeded(raw, options.budget);
        out.reserve(raw);
        out.insert(out.end(), l.begin(), l.end());
        out.insert(out.end(), r.begin(), r.end());
        out = absorb(std::move(out));
        release(n.a);
        release(n.b);
        break;
      }
      case Op::And: {
        const auto& l = terms[n.a];
        const auto& r = terms[n.b];
        const std::size_t raw = l.size() * r.size();
        if (raw > options.budget) throw DnfBudgetExceeded(raw, options.budget);
        out.reserve(raw);
        for (const Monomial& x : l) {
          for (const Monomial& y : r) {
            Monomial m = x & y;
            if (keep_contradictions || !m.contradictory()) out.push_back(m);
          }
        }
        out = absorb(std::move(out));
        release(n.a);
        release(n.b);
        break;
      }
    }
  }
  return std::move(terms[live.output()]);
}

}  // namespace

bool Monomial::eval(const Assignment& a) const {
  for (std::size_t j = 0; j < a.size() && j < 64; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    if ((pos & bit) && !a[j]) return false;
    if ((neg & bit) && a[j]) return false;
  }
  return true;
}

std::uint64_t Monomial::eval_block(std::span<const std::uint64_t> var_words) const {
  std::uint64_t acc = ~std::uint64_t{0};
  for (std::uint64_t bits = pos; bits; bits &= bits - 1) acc &= var_words[std::countr_zero(bits)];
  for (std::uint64_t bits = neg; bits; bits &= bits - 1)
    acc &= ~var_words[std::countr_zero(bits)];
  return acc;
}

Dnf::Dnf(std::size_t num_vars) : num_vars_(num_vars) { check_var_count(num_vars); }

Dnf Dnf::from_monomials(std::size_t num_vars, std::vector<Monomial> monomials) {
  Dnf d(num_vars);
  const std::uint64_t outside = ~var_mask(num_vars);
  std::erase_if(monomials, [](const Monomial& m) { return m.contradictory(); });
  for (const Monomial& m : monomials) {
    if ((m.pos | m.neg) & outside) throw DnfError("monomial mentions a variable out of range");
  }
  std::sort(monomials.begin(), monomials.end());
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());
  d.monomials_ = std::move(monomials);
  return d;
}

Dnf Dnf::constant(std::size_t num_vars, bool value) {
  Dnf d(num_vars);
  if (value) d.monomials_.push_back({});
  return d;
}

bool Dnf::is_positive() const {
  return std::all_of(monomials_.begin(), monomials_.end(),
                     [](const Monomial& m) { return m.neg == 0; });
}

bool Dnf::mentions_negation(VarIndex var) const {
  return std::any_of(monomials_.begin(), monomials_.end(),
                     [&](const Monomial& m) { return (m.neg & var_bit(var)) != 0; });
}

Dnf Dnf::absorbed() const {
  Dnf d(num_vars_);
  d.monomials_ = absorb(monomials_);
  return d;
}

std::vector<Monomial> absorb(std::vector<Monomial> monomials) {
  // Fewest literals first: a monomial can only be subsumed by a shorter one.
  std::sort(monomials.begin(), monomials.end(), [](const Monomial& x, const Monomial& y) {
    const auto lx = x.literal_count();
    const auto ly = y.literal_count();
    return lx != ly ? lx < ly : x < y;
  });
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());

  std::vector<Monomial> kept;
  kept.reserve(monomials.size());
  for (const Monomial& m : monomials) {
    const bool subsumed = std::any_of(kept.begin(), kept.end(),
                                      [&](const Monomial& k) { return k.subsumes(m); });
    if (!subsumed) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

Dnf to_dnf(const Circuit& c, const DnfOptions& options) {
  return Dnf::from_monomials(c.num_vars(), expand(c, options, false));
}

std::vector<Monomial> expand_keeping_contradictions(const Circuit& c, const DnfOptions& options) {
  return expand(c, options, true);
}

bool eval_dnf(const Dnf& d, const Assignment& a) {
  if (a.size() != d.num_vars()) {
    throw std::invalid_argument("assignment has " + std::to_string(a.size()) +
                                " bits, DNF has " + std::to_string(d.num_vars()) + " variables");
  }
  return std::any_of(d.monomials().begin(), d.monomials().end(),
                     [&](const Monomial& m) { return m.eval(a); });
}

std::uint64_t eval_dnf_block(const Dnf& d, std::span<const std::uint64_t> var_words) {
  if (var_words.size() != d.num_vars())
    throw std::invalid_argument("variable word count does not match DNF");
  std::uint64_t acc = 0;
  for (const Monomial& m : d.monomials()) acc |= m.eval_block(var_words);
  return acc;
}

RawSplit split_on_negation(std::span<const Monomial> monomials, VarIndex var) {
  RawSplit split;
  const std::uint64_t bit = var_bit(var);
  for (const Monomial& m : monomials) {
    if (m.neg & bit) {
      split.p.push_back({m.pos, m.neg & ~bit});
    } else {
      split.rest.push_back(m);
    }
  }
  return split;
}

Factored factor(const Dnf& d, VarIndex var) {
  if (var >= d.num_vars()) throw DnfError("variable out of range: " + std::to_string(var));
  for (const Monomial& m : d.monomials()) {
    if (m.contradictory()) throw DnfError("factor: contradictory monomial in input");
  }
  RawSplit split = split_on_negation(d.monomials(), var);
  return {Dnf::from_monomials(d.num_vars(), std::move(split.p)),
          Dnf::from_monomials(d.num_vars(), std::move(split.rest))};
}

Dnf eliminate_negation_dnf(const Dnf& d, VarIndex var) {
  Factored f = factor(d, var);
  std::vector<Monomial> merged(f.p.monomials().begin(), f.p.monomials().end());
  merged.insert(merged.end(), f.rest.monomials().begin(), f.rest.monomials().end());
  return Dnf::from_monomials(d.num_vars(), absorb(std::move(merged)));
}

Dnf monotonize_dnf(const Dnf& d) {
  Dnf current = d;
  for (VarIndex v = 0; v < d.num_vars(); ++v)
    if (current.mentions_negation(v)) current = eliminate_negation_dnf(current, v);
  return current;
}

DnfSize dnf_size(const Dnf& d) {
  DnfSize s;
  s.monomials = d.size();
  for (const Monomial& m : d.monomials()) s.literals += m.literal_count();
  return s;
}

std::string format_monomial(const Monomial& m, std::size_t num_vars) {
  if (m.empty()) return "1";
  std::string out;
  for (std::size_t j = 0; j < num_vars && j < 64; ++j) {
    const std::uint64_t bit = std::uint64_t{1} << j;
    if (m.pos & bit) {
      if (!out.empty()) out += ' ';
      out += "x" + std::to_string(j + 1);
    }
    if (m.neg & bit) {
      if (!out.empty()) out += ' ';
      out += "~x" + std::to_string(j + 1);
    }
  }
  return out;
}

std::string format_dnf(const Dnf& d) {
  if (d.empty()) return "0\n";
  std::string out;
  for (const Monomial& m : d.monomials()) out += format_monomial(m, d.num_vars()) + '\n';
  return out;
}

Circuit to_circuit(const Dnf& d) {
  CircuitBuilder b(d.num_vars());
  std::vector<NodeId> terms;
  terms.reserve(d.size());
  for (const Monomial& m : d.monomials()) {
    std::vector<NodeId> literals;
    for (std::size_t j = 0; j < d.num_vars(); ++j) {
      const std::uint64_t bit = std::uint64_t{1} << j;
      if (m.pos & bit) literals.push_back(b.input(static_cast<VarIndex>(j)));
      if (m.neg & bit) literals.push_back(b.neg_input(static_cast<VarIndex>(j)));
    }
    terms.push_back(b.make_and(literals));
  }
  NodeId out = b.make_or(terms);
  return prune(std::move(b).build(out));
}

}  // namespace monoclique
