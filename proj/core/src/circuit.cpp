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


#include "monoclique/circuit.hpp"

#include <limits>

namespace monoclique {

std::string_view op_name(Op op) {
  switch (op) {
    case Op::Input:
      return "IN";
    case Op::NegInput:
      return "NEG";
    case Op::Const:
      return "CONST";
    case Op::Not:
      return "NOT";
    case Op::And:
      return "AND";
    case Op::Or:
      return "OR";
  }
  return "?";
}

Assignment Assignment::from_string(std::string_view text) {
  Assignment a(text.size());
  for (std::size_t j = 0; j < text.size(); ++j) {
    if (text[j] != '0' && text[j] != '1') {
      throw std::invalid_argument("assignment must contain only '0' and '1', got '" +
                                  std::string(text) + "'");
    }
    a.set(j, text[j] == '1');
  }
  return a;
}

Assignment Assignment::from_index(std::uint64_t index, std::size_t n) {
  if (n > 64) throw std::invalid_argument("assignment index limited to 64 variables");
  Assignment a(n);
  for (std::size_t j = 0; j < n; ++j) a.set(j, (index >> (n - 1 - j)) & 1u);
  return a;
}

std::uint64_t Assignment::index() const {
  if (bits_.size() > 64) throw std::invalid_argument("assignment index limited to 64 variables");
  std::uint64_t k = 0;
  for (auto bit : bits_) k = (k << 1) | bit;
  return k;
}

std::string Assignment::to_string() const {
  std::string s(bits_.size(), '0');
  for (std::size_t j = 0; j < bits_.size(); ++j)
    if (bits_[j]) s[j] = '1';
  return s;
}

std::string Diagnostic::to_string() const {
  if (node) return "n" + std::to_string(*node) + ": " + message;
  return message;
}

std::optional<Diagnostic> validate(const Circuit& c) {
  const auto nodes = c.nodes();
  if (nodes.empty()) return Diagnostic{"circuit has no nodes", std::nullopt};
  for (NodeId id = 0; id < nodes.size(); ++id) {
    const Node& n = nodes[id];
    switch (n.op) {
      case Op::Input:
      case Op::NegInput:
        if (n.a >= c.num_vars()) return Diagnostic{"variable out of range", id};
        break;
      case Op::Const:
        if (n.a > 1) return Diagnostic{"constant must be 0 or 1", id};
        break;
      case Op::Not:
        if (n.a >= id) return Diagnostic{"forward reference", id};
        break;
      case Op::And:
      case Op::Or:
        if (n.a >= id || n.b >= id) return Diagnostic{"forward reference", id};
        break;
      default:
        return Diagnostic{"unknown node kind", id};
    }
  }
  if (c.output() >= nodes.size()) return Diagnostic{"output is not a node id", std::nullopt};
  return std::nullopt;
}

void require_valid(const Circuit& c) {
  if (auto d = validate(c)) throw CircuitError("invalid circuit: " + d->to_string());
}

bool eval(const Circuit& c, const Assignment& a) {
  if (a.size() != c.num_vars()) {
    throw std::invalid_argument("assignment has " + std::to_string(a.size()) +
                                " bits, circuit has " + std::to_string(c.num_vars()) +
                                " variables");
  }
  require_valid(c);
  std::vector<std::uint8_t> value(c.node_count());
  const auto nodes = c.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& n = nodes[i];
    switch (n.op) {
      case Op::Input:
        value[i] = a[n.a];
        break;
      case Op::NegInput:
        value[i] = !a[n.a];
        break;
      case Op::Const:
        value[i] = static_cast<std::uint8_t>(n.a);
        break;
      case Op::Not:
        value[i] = !value[n.a];
        break;
      case Op::And:
        value[i] = value[n.a] & value[n.b];
        break;
      case Op::Or:
        value[i] = value[n.a] | value[n.b];
        break;
    }
  }
  return value[c.output()] != 0;
}

std::uint64_t eval_block(const Circuit& c, std::span<const std::uint64_t> var_words,
                         std::vector<std::uint64_t>& scratch) {
  if (var_words.size() != c.num_vars())
    throw std::invalid_argument("variable word count does not match circuit");
  const auto nodes = c.nodes();
  scratch.resize(nodes.size());
  constexpr std::uint64_t kAll = ~std::uint64_t{0};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& n = nodes[i];
    switch (n.op) {
      case Op::Input:
        scratch[i] = var_words[n.a];
        break;
      case Op::NegInput:
        scratch[i] = ~var_words[n.a];
        break;
      case Op::Const:
        scratch[i] = n.a ? kAll : 0;
        break;
      case Op::Not:
        scratch[i] = ~scratch[n.a];
        break;
      case Op::And:
        scratch[i] = scratch[n.a] & scratch[n.b];
        break;
      case Op::Or:
        scratch[i] = scratch[n.a] | scratch[n.b];
        break;
    }
  }
  return scratch[c.output()];
}

std::uint64_t eval_block(const Circuit& c, std::span<const std::uint64_t> var_words) {
  std::vector<std::uint64_t> scratch;
  return eval_block(c, var_words, scratch);
}

namespace {

std::vector<bool> reachable(const Circuit& c) {
  std::vector<bool> live(c.node_count(), false);
  if (c.node_count() == 0) return live;
  live[c.output()] = true;
  const auto nodes = c.nodes();
  for (std::size_t i = nodes.size(); i-- > 0;) {
    if (!live[i]) continue;
    const Node& n = nodes[i];
    if (n.arity() >= 1) live[n.a] = true;
    if (n.arity() == 2) live[n.b] = true;
  }
  return live;
}

}  // namespace

std::size_t size(const Circuit& c) {
  const auto live = reachable(c);
  std::size_t gates = 0;
  for (std::size_t i = 0; i < live.size(); ++i)
    if (live[i] && c.nodes()[i].is_gate()) ++gates;
  return gates;
}

bool is_standard(const Circuit& c) {
  for (const Node& n : c.nodes())
    if (n.op == Op::Not) return false;
  return true;
}

bool is_syntactically_monotone(const Circuit& c) {
  for (const Node& n : c.nodes())
    if (n.op == Op::Not || n.op == Op::NegInput) return false;
  return true;
}

bool has_negated_input(const Circuit& c, VarIndex var) {
  for (const Node& n : c.nodes())
    if (n.op == Op::NegInput && n.a == var) return true;
  return false;
}

Circuit prune(const Circuit& c) {
  require_valid(c);
  const auto live = reachable(c);
  constexpr NodeId kDead = std::numeric_limits<NodeId>::max();
  std::vector<NodeId> remap(c.node_count(), kDead);
  std::vector<Node> out;
  const auto nodes = c.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!live[i]) continue;
    Node n = nodes[i];
    if (n.arity() >= 1) n.a = remap[n.a];
    if (n.arity() == 2) n.b = remap[n.b];
    remap[i] = static_cast<NodeId>(out.size());
    out.push_back(n);
  }
  return Circuit(c.num_vars(), std::move(out), remap[c.output()]);
}

NodeId CircuitBuilder::append(Node n) {
  nodes_.push_back(n);
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId CircuitBuilder::leaf(Node n) {
  const std::uint64_t key = (std::uint64_t{static_cast<std::uint8_t>(n.op)} << 32) | n.a;
  if (auto it = leaves_.find(key); it != leaves_.end()) return it->second;
  NodeId id = append(n);
  leaves_.emplace(key, id);
  return id;
}

NodeId CircuitBuilder::input(VarIndex var) {
  if (var >= num_vars_) throw CircuitError("variable out of range: " + std::to_string(var));
  return leaf(Node::input(var));
}

NodeId CircuitBuilder::neg_input(VarIndex var) {
  if (var >= num_vars_) throw CircuitError("variable out of range: " + std::to_string(var));
  return leaf(Node::neg_input(var));
}

NodeId CircuitBuilder::constant(bool bit) { return leaf(Node::constant(bit)); }

NodeId CircuitBuilder::make_not(NodeId child) { return append(Node::not_of(child)); }
NodeId CircuitBuilder::make_and(NodeId l, NodeId r) { return append(Node::and_of(l, r)); }
NodeId CircuitBuilder::make_or(NodeId l, NodeId r) { return append(Node::or_of(l, r)); }

NodeId CircuitBuilder::make_and(std::span<const NodeId> operands) {
  if (operands.empty()) return constant(true);
  NodeId acc = operands[0];
  for (std::size_t i = 1; i < operands.size(); ++i) acc = make_and(acc, operands[i]);
  return acc;
}

NodeId CircuitBuilder::make_or(std::span<const NodeId> operands) {
  if (operands.empty()) return constant(false);
  NodeId acc = operands[0];
  for (std::size_t i = 1; i < operands.size(); ++i) acc = make_or(acc, operands[i]);
  return acc;
}

Circuit CircuitBuilder::build(NodeId output) && {
  Circuit c(num_vars_, std::move(nodes_), output);
  require_valid(c);
  return c;
}

}  // namespace monoclique
