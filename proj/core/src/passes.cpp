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


#include "monoclique/passes.hpp"

#include <array>
#include <limits>
#include <vector>

namespace monoclique {
namespace {

constexpr NodeId kNone = std::numeric_limits<NodeId>::max();

void require_standard(const Circuit& c, const char* pass) {
  require_valid(c);
  if (!is_standard(c))
    throw CircuitError(std::string(pass) + " requires a standard circuit (no NOT gates)");
}

}  // namespace

Circuit standardize(const Circuit& c) {
  require_valid(c);
  const auto nodes = c.nodes();
  const std::size_t count = nodes.size();

  // needed[i][p]: rail p (0 = positive, 1 = negated) of node i is demanded.
  std::vector<std::array<bool, 2>> needed(count, {false, false});
  needed[c.output()][0] = true;
  for (std::size_t i = count; i-- > 0;) {
    const Node& n = nodes[i];
    for (int p = 0; p < 2; ++p) {
      if (!needed[i][p]) continue;
      switch (n.op) {
        case Op::Not:
          needed[n.a][1 - p] = true;
          break;
        case Op::And:
        case Op::Or:
          needed[n.a][p] = true;
          needed[n.b][p] = true;
          break;
        default:
          break;
      }
    }
  }

  CircuitBuilder out(c.num_vars());
  std::vector<std::array<NodeId, 2>> rail(count, {kNone, kNone});
  for (std::size_t i = 0; i < count; ++i) {
    const Node& n = nodes[i];
    for (int p = 0; p < 2; ++p) {
      if (!needed[i][p]) continue;
      const bool negated = p == 1;
      switch (n.op) {
        case Op::Input:
          rail[i][p] = negated ? out.neg_input(n.a) : out.input(n.a);
          break;
        case Op::NegInput:
          rail[i][p] = negated ? out.input(n.a) : out.neg_input(n.a);
          break;
        case Op::Const:
          rail[i][p] = out.constant((n.a != 0) != negated);
          break;
        case Op::Not:
          rail[i][p] = rail[n.a][1 - p];
          break;
        case Op::And:
          rail[i][p] = negated ? out.make_or(rail[n.a][p], rail[n.b][p])
                               : out.make_and(rail[n.a][p], rail[n.b][p]);
          break;
        case Op::Or:
          rail[i][p] = negated ? out.make_and(rail[n.a][p], rail[n.b][p])
                               : out.make_or(rail[n.a][p], rail[n.b][p]);
          break;
      }
    }
  }
  return prune(std::move(out).build(rail[c.output()][0]));
}

Circuit constant_fold(const Circuit& c) {
  require_valid(c);
  const auto nodes = c.nodes();

  // Each node maps either to a constant or to a node of the output circuit.
  struct Folded {
    int constant = -1;  // -1: not constant
    NodeId id = kNone;
  };
  CircuitBuilder out(c.num_vars());
  std::vector<Folded> map(nodes.size());

  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& n = nodes[i];
    Folded& f = map[i];
    switch (n.op) {
      case Op::Input:
        f.id = out.input(n.a);
        break;
      case Op::NegInput:
        f.id = out.neg_input(n.a);
        break;
      case Op::Const:
        f.constant = static_cast<int>(n.a);
        break;
      case Op::Not: {
        const Folded& x = map[n.a];
        if (x.constant >= 0) {
          f.constant = 1 - x.constant;
        } else {
          f.id = out.make_not(x.id);
        }
        break;
      }
      case Op::And:
      case Op::Or: {
        const Folded& l = map[n.a];
        const Folded& r = map[n.b];
        // Absorbing element: 0 for AND, 1 for OR.
        const int absorbing = n.op == Op::And ? 0 : 1;
        if (l.constant == absorbing || r.constant == absorbing) {
          f.constant = absorbing;
        } else if (l.constant >= 0) {
          f = r;
        } else if (r.constant >= 0) {
          f = l;
        } else {
          f.id = n.op == Op::And ? out.make_and(l.id, r.id) : out.make_or(l.id, r.id);
        }
        break;
      }
    }
  }

  const Folded& root = map[c.output()];
  if (root.constant >= 0) {
    CircuitBuilder k(c.num_vars());
    NodeId id = k.constant(root.constant == 1);
    return std::move(k).build(id);
  }
  return prune(std::move(out).build(root.id));
}

Circuit substitute_literal(const Circuit& c, VarIndex var) {
  require_standard(c, "substitute_literal");
  if (var >= c.num_vars()) throw CircuitError("variable out of range: " + std::to_string(var));
  std::vector<Node> nodes(c.nodes().begin(), c.nodes().end());
  for (Node& n : nodes)
    if (n.op == Op::NegInput && n.a == var) n = Node::constant(true);
  return constant_fold(Circuit(c.num_vars(), std::move(nodes), c.output()));
}

Circuit monotonize_circuit_level(const Circuit& c) {
  require_standard(c, "monotonize_circuit_level");
  Circuit current = prune(c);
  for (VarIndex v = 0; v < c.num_vars(); ++v)
    if (has_negated_input(current, v)) current = substitute_literal(current, v);
  return current;
}

}  // namespace monoclique
