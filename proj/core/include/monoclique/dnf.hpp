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

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "monoclique/circuit.hpp"

namespace monoclique {

/// Largest variable count a Dnf can carry: literal sets are 64-bit masks.
inline constexpr std::size_t kMaxDnfVars = 64;
inline constexpr std::size_t kDefaultDnfBudget = 1'000'000;

class DnfError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expansion produced more monomials at one node than the budget allows.
class DnfBudgetExceeded : public DnfError {
 public:
  DnfBudgetExceeded(std::size_t reached, std::size_t budget)
      : DnfError("DNF monomial budget exceeded: reached " + std::to_string(reached) +
                 " > budget " + std::to_string(budget)),
        reached_(reached),
        budget_(budget) {}

  std::size_t reached() const { return reached_; }
  std::size_t budget() const { return budget_; }

 private:
  std::size_t reached_;
  std::size_t budget_;
};

/// Conjunction of literals. Bit j of `pos` (resp. `neg`) set means x_{j+1}
/// (resp. ~x_{j+1}) occurs. The empty monomial is the constant 1.
/// Ordering is lexicographic on (pos, neg) as unsigned integers.
struct Monomial {
  std::uint64_t pos = 0;
  std::uint64_t neg = 0;

  bool contradictory() const { return (pos & neg) != 0; }
  bool empty() const { return pos == 0 && neg == 0; }
  std::size_t literal_count() const {
    return static_cast<std::size_t>(std::popcount(pos) + std::popcount(neg));
  }
  /// Every literal of *this occurs in `other`, so `other` implies *this.
  bool subsumes(const Monomial& other) const {
    return (pos & ~other.pos) == 0 && (neg & ~other.neg) == 0;
  }
  Monomial operator&(const Monomial& o) const { return {pos | o.pos, neg | o.neg}; }

  bool eval(const Assignment& a) const;
  std::uint64_t eval_block(std::span<const std::uint64_t> var_words) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Duplicate-free, contradiction-free set of monomials in canonical order.
/// No monomials is the constant 0.
class Dnf {
 public:
  Dnf() = default;
  explicit Dnf(std::size_t num_vars);

  /// Drops contradictory monomials and duplicates, then sorts. Does not
  /// apply absorption.
  static Dnf from_monomials(std::size_t num_vars, std::vector<Monomial> monomials);
  static Dnf constant(std::size_t num_vars, bool value);

  std::size_t num_vars() const { return num_vars_; }
  std::span<const Monomial> monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }
  bool empty() const { return monomials_.empty(); }

  /// No negated literal anywhere.
  bool is_positive() const;
  bool mentions_negation(VarIndex var) const;

  /// Copy with every monomial that is a superset of another removed.
  Dnf absorbed() const;

  friend bool operator==(const Dnf&, const Dnf&) = default;

 private:
  std::size_t num_vars_ = 0;
  std::vector<Monomial> monomials_;
};

/// Sort, dedupe and drop every monomial subsumed by another one.
std::vector<Monomial> absorb(std::vector<Monomial> monomials);

struct DnfOptions {
  std::size_t budget = kDefaultDnfBudget;
};

/// Bottom-up expansion of a standard circuit. Contradictory products are
/// deleted when created and absorption runs at every node.
Dnf to_dnf(const Circuit& c, const DnfOptions& options = {});

/// Same expansion, but contradictory monomials such as ~x1 & x1 are kept.
/// Used to inspect what a circuit looks like before simplification.
std::vector<Monomial> expand_keeping_contradictions(const Circuit& c,
                                                    const DnfOptions& options = {});

bool eval_dnf(const Dnf& d, const Assignment& a);
std::uint64_t eval_dnf_block(const Dnf& d, std::span<const std::uint64_t> var_words);

/// Split on the literal ~var: d = (~var & p) | rest.
struct Factored {
  Dnf p;
  Dnf rest;
};
Factored factor(const Dnf& d, VarIndex var);

/// Monomials containing ~var with that literal removed (the p part), and all
/// other monomials (the rest). No precondition; contradictory input is
/// passed through unchanged.
struct RawSplit {
  std::vector<Monomial> p;
  std::vector<Monomial> rest;
};
RawSplit split_on_negation(std::span<const Monomial> monomials, VarIndex var);

/// p | rest from `factor`, absorbed. Equal to d when d is a monotone
/// function; otherwise only pointwise >= d.
Dnf eliminate_negation_dnf(const Dnf& d, VarIndex var);

/// eliminate_negation_dnf for every negated variable, ascending.
Dnf monotonize_dnf(const Dnf& d);

struct DnfSize {
  std::size_t monomials = 0;
  std::size_t literals = 0;
  friend bool operator==(const DnfSize&, const DnfSize&) = default;
};
DnfSize dnf_size(const Dnf& d);

/// One monomial per line (`x3 ~x5`), `0` for the empty Dnf, `1` for the
/// empty monomial.
std::string format_dnf(const Dnf& d);
std::string format_monomial(const Monomial& m, std::size_t num_vars);

/// Two-level realization: OR over monomials of AND over literals.
Circuit to_circuit(const Dnf& d);

}  // namespace monoclique
