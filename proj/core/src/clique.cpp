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


#include "monoclique/clique.hpp"

#include <algorithm>
#include <string>

namespace monoclique {
namespace {

// Calls `visit` with each s-subset of {0..m-1} in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t m, std::size_t s, Visit&& visit) {
  if (s > m) return;
  std::vector<std::size_t> subset(s);
  for (std::size_t i = 0; i < s; ++i) subset[i] = i;
  while (true) {
    if (!visit(std::span<const std::size_t>(subset))) return;
    std::size_t i = s;
    while (i > 0 && subset[i - 1] == m - s + i - 1) --i;
    if (i == 0) return;
    ++subset[i - 1];
    for (std::size_t k = i; k < s; ++k) subset[k] = subset[k - 1] + 1;
  }
}

enum class EdgeState : std::uint8_t { Free, Forced0, Forced1 };

// Monotone DNF circuit of CLIQUE restricted by `state`: subsets using a
// forced-0 edge disappear, forced-1 edges drop out of their conjunctions.
NodeId build_restricted(CircuitBuilder& b, const CliqueSpec& spec,
                        std::span<const EdgeState> state, std::size_t gate_budget) {
  const EdgeIndexing idx(spec.m());
  std::vector<NodeId> terms;
  bool constant_one = false;
  std::size_t gates = 0;
  for_each_subset(spec.m(), spec.s(), [&](std::span<const std::size_t> vs) {
    std::vector<NodeId> literals;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t k = i + 1; k < vs.size(); ++k) {
        const VarIndex j = idx.index(vs[i], vs[k]);
        switch (state[j]) {
          case EdgeState::Forced0:
            return true;
          case EdgeState::Forced1:
            break;
          case EdgeState::Free:
            literals.push_back(j);
            break;
        }
      }
    }
    if (literals.empty()) {
      constant_one = true;
      return false;
    }
    gates += literals.size();  // AND gates plus the OR gate joining this term
    if (gates > gate_budget) {
      throw CliqueError("clique circuit exceeds gate budget " + std::to_string(gate_budget));
    }
    for (NodeId& l : literals) l = b.input(l);
    terms.push_back(b.make_and(literals));
    return true;
  });
  if (constant_one) return b.constant(true);
  return b.make_or(terms);
}

NodeId build_shannon(CircuitBuilder& b, const CliqueSpec& spec, std::span<const VarIndex> pivots,
                     std::vector<EdgeState>& state, std::size_t gate_budget) {
  if (pivots.empty()) return build_restricted(b, spec, state, gate_budget);
  const VarIndex j = pivots.front();
  state[j] = EdgeState::Forced0;
  const NodeId low = build_shannon(b, spec, pivots.subspan(1), state, gate_budget);
  state[j] = EdgeState::Forced1;
  const NodeId high = build_shannon(b, spec, pivots.subspan(1), state, gate_budget);
  state[j] = EdgeState::Free;
  const NodeId neg_branch = b.make_and(b.neg_input(j), low);
  const NodeId pos_branch = b.make_and(b.input(j), high);
  return b.make_or(neg_branch, pos_branch);
}

}  // namespace

CliqueSpec::CliqueSpec(std::size_t m, std::size_t s) : m_(m), s_(s) {
  if (s < 1 || s > m) {
    throw CliqueError("clique spec requires 1 <= s <= m, got m=" + std::to_string(m) +
                      " s=" + std::to_string(s));
  }
}

VarIndex EdgeIndexing::index(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  if (u == v || v >= m_) {
    throw CliqueError("no edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") on " + std::to_string(m_) + " vertices");
  }
  // Edges before row u: (m-1) + (m-2) + ... + (m-u).
  return static_cast<VarIndex>(u * (2 * m_ - u - 1) / 2 + (v - u - 1));
}

Edge EdgeIndexing::edge(VarIndex j) const {
  if (j >= num_vars()) throw CliqueError("edge index out of range: " + std::to_string(j));
  std::size_t u = 0;
  std::size_t rest = j;
  while (rest >= m_ - 1 - u) {
    rest -= m_ - 1 - u;
    ++u;
  }
  return {u, u + 1 + rest};
}

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool clique_oracle(const CliqueSpec& spec, const Assignment& a) {
  if (a.size() != spec.num_vars()) {
    throw std::invalid_argument("assignment has " + std::to_string(a.size()) + " bits, CLIQUE(" +
                                std::to_string(spec.m()) + "," + std::to_string(spec.s()) +
                                ") has " + std::to_string(spec.num_vars()) + " edges");
  }
  const std::size_t m = spec.m();
  std::vector<std::uint8_t> adj(m * m, 0);
  std::size_t j = 0;
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = u + 1; v < m; ++v, ++j) adj[u * m + v] = adj[v * m + u] = a[j];
  }
  bool found = false;
  for_each_subset(m, spec.s(), [&](std::span<const std::size_t> vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t k = i + 1; k < vs.size(); ++k)
        if (!adj[vs[i] * m + vs[k]]) return true;
    found = true;
    return false;
  });
  return found;
}

Dnf clique_monomials(const CliqueSpec& spec) {
  const EdgeIndexing idx(spec.m());
  std::vector<Monomial> monomials;
  for_each_subset(spec.m(), spec.s(), [&](std::span<const std::size_t> vs) {
    Monomial mono;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t k = i + 1; k < vs.size(); ++k)
        mono.pos |= std::uint64_t{1} << idx.index(vs[i], vs[k]);
    monomials.push_back(mono);
    return true;
  });
  return Dnf::from_monomials(spec.num_vars(), std::move(monomials));
}

Circuit build_monotone_dnf_circuit(const CliqueSpec& spec, std::size_t gate_budget) {
  return build_shannon_circuit(spec, {}, gate_budget);
}

Circuit build_shannon_circuit(const CliqueSpec& spec, std::span<const VarIndex> pivots,
                              std::size_t gate_budget) {
  const std::size_t n = spec.num_vars();
  std::vector<EdgeState> state(n, EdgeState::Free);
  for (VarIndex p : pivots) {
    if (p >= n) throw CliqueError("pivot out of range: " + std::to_string(p));
    if (state[p] != EdgeState::Free) throw CliqueError("duplicate pivot: " + std::to_string(p));
    state[p] = EdgeState::Forced0;
  }
  std::fill(state.begin(), state.end(), EdgeState::Free);

  CircuitBuilder b(n);
  for (VarIndex j = 0; j < n; ++j) b.input(j);
  const NodeId out = build_shannon(b, spec, pivots, state, gate_budget);
  return prune(std::move(b).build(out));
}

Circuit build_pon_circuit(const CliqueSpec& spec) {
  if (spec.num_vars() == 0) throw CliqueError("Pon circuit needs at least one edge variable");
  CircuitBuilder b(spec.num_vars());
  for (VarIndex j = 0; j < spec.num_vars(); ++j) b.input(j);
  std::vector<EdgeState> state(spec.num_vars(), EdgeState::Free);
  const NodeId monotone = build_restricted(b, spec, state, kDefaultGateBudget);
  const NodeId contradiction = b.make_and(b.neg_input(0), b.input(0));
  const NodeId out = b.make_or(contradiction, monotone);
  return prune(std::move(b).build(out));
}

}  // namespace monoclique
