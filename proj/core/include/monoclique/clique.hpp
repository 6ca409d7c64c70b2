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
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "monoclique/circuit.hpp"
#include "monoclique/dnf.hpp"

namespace monoclique {

class CliqueError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// CLIQUE(m, s): graphs on m vertices containing a complete subgraph on s
/// vertices. Requires 1 <= s <= m.
class CliqueSpec {
 public:
  CliqueSpec(std::size_t m, std::size_t s);

  std::size_t m() const { return m_; }
  std::size_t s() const { return s_; }
  /// Number of edge variables, C(m, 2).
  std::size_t num_vars() const { return m_ * (m_ - 1) / 2; }

  friend bool operator==(const CliqueSpec&, const CliqueSpec&) = default;

 private:
  std::size_t m_;
  std::size_t s_;
};

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Variable j <-> edge (u, v), u < v, 0-based vertices, lexicographic in
/// (u, v): for m = 4 the order is (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
class EdgeIndexing {
 public:
  explicit EdgeIndexing(std::size_t m) : m_(m) {}

  std::size_t m() const { return m_; }
  std::size_t num_vars() const { return m_ * (m_ - 1) / 2; }

  VarIndex index(std::size_t u, std::size_t v) const;
  Edge edge(VarIndex j) const;

 private:
  std::size_t m_;
};

std::uint64_t binomial(std::size_t n, std::size_t k);

/// Direct enumeration of s-subsets of vertices over the adjacency matrix.
bool clique_oracle(const CliqueSpec& spec, const Assignment& a);

/// Monomials of the canonical positive DNF: one per s-subset, holding the
/// subset's internal edges. Sorted canonically.
Dnf clique_monomials(const CliqueSpec& spec);

inline constexpr std::size_t kDefaultGateBudget = 10'000'000;

/// OR over every s-subset of the AND of its edge variables. All n inputs are
/// defined first, in index order.
Circuit build_monotone_dnf_circuit(const CliqueSpec& spec,
                                   std::size_t gate_budget = kDefaultGateBudget);

/// Shannon expansion over `pivots`:
///   f = (~x_j & f|x_j=0) | (x_j & f|x_j=1)
/// with monotone DNF leaves for each restriction. The pivots must be
/// distinct, in-range variable indices. An empty pivot list gives exactly
/// build_monotone_dnf_circuit.
Circuit build_shannon_circuit(const CliqueSpec& spec, std::span<const VarIndex> pivots,
                              std::size_t gate_budget = kDefaultGateBudget);

/// (~x1 & x1) | M where M is the monotone DNF circuit. The added term is
/// identically 0.
Circuit build_pon_circuit(const CliqueSpec& spec);

}  // namespace monoclique
