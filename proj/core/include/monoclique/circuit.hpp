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
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace monoclique {

using NodeId = std::uint32_t;
using VarIndex = std::uint32_t;

class CircuitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Op : std::uint8_t { Input, NegInput, Const, Not, And, Or };

std::string_view op_name(Op op);

/// One node of a single-output circuit. For leaves, `a` holds the variable
/// index (Input/NegInput) or the constant bit (Const); for gates it holds the
/// child ids.
struct Node {
  Op op = Op::Const;
  std::uint32_t a = 0;
  std::uint32_t b = 0;

  static Node input(VarIndex var) { return {Op::Input, var, 0}; }
  static Node neg_input(VarIndex var) { return {Op::NegInput, var, 0}; }
  static Node constant(bool bit) { return {Op::Const, bit ? 1u : 0u, 0}; }
  static Node not_of(NodeId child) { return {Op::Not, child, 0}; }
  static Node and_of(NodeId l, NodeId r) { return {Op::And, l, r}; }
  static Node or_of(NodeId l, NodeId r) { return {Op::Or, l, r}; }

  bool is_gate() const { return op == Op::Not || op == Op::And || op == Op::Or; }
  bool is_leaf() const { return !is_gate(); }
  int arity() const {
    switch (op) {
      case Op::Not:
        return 1;
      case Op::And:
      case Op::Or:
        return 2;
      default:
        return 0;
    }
  }

  friend bool operator==(const Node&, const Node&) = default;
};

/// A point of {0,1}^n. Position j holds x_{j+1}; the text form writes
/// position 0 first, so lexicographic string order equals numeric order of
/// `index()` with x_1 as the most significant bit.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t n) : bits_(n, 0) {}

  static Assignment from_string(std::string_view text);
  static Assignment from_index(std::uint64_t index, std::size_t n);

  std::size_t size() const { return bits_.size(); }
  bool operator[](std::size_t j) const { return bits_[j] != 0; }
  void set(std::size_t j, bool value) { bits_[j] = value ? 1 : 0; }

  std::uint64_t index() const;
  std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Directed acyclic gate graph with dense ids in definition order. Children
/// always precede their parents, so a forward sweep is a topological walk.
/// Construction does not validate; see `validate`.
class Circuit {
 public:
  Circuit() = default;
  Circuit(std::size_t num_vars, std::vector<Node> nodes, NodeId output)
      : num_vars_(num_vars), nodes_(std::move(nodes)), output_(output) {}

  std::size_t num_vars() const { return num_vars_; }
  std::span<const Node> nodes() const { return nodes_; }
  const Node& node(NodeId id) const { return nodes_.at(id); }
  std::size_t node_count() const { return nodes_.size(); }
  NodeId output() const { return output_; }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t num_vars_ = 0;
  std::vector<Node> nodes_;
  NodeId output_ = 0;
};

struct Diagnostic {
  std::string message;
  std::optional<NodeId> node;

  std::string to_string() const;
};

/// First violated structural invariant, or nullopt for a well-formed circuit.
std::optional<Diagnostic> validate(const Circuit& c);

/// Throws CircuitError carrying the diagnostic when `c` is malformed.
void require_valid(const Circuit& c);

bool eval(const Circuit& c, const Assignment& a);

/// Bit-parallel evaluation: bit `l` of `var_words[j]` is the value of x_{j+1}
/// in lane `l`. Returns the output word. `scratch` is resized as needed and
/// may be reused across calls.
std::uint64_t eval_block(const Circuit& c, std::span<const std::uint64_t> var_words,
                         std::vector<std::uint64_t>& scratch);
std::uint64_t eval_block(const Circuit& c, std::span<const std::uint64_t> var_words);

/// Number of And/Or/Not gates reachable from the output. Leaves are input
/// nodes and never count.
std::size_t size(const Circuit& c);

/// No Not gates; negated inputs are allowed.
bool is_standard(const Circuit& c);

/// Neither Not gates nor negated inputs.
bool is_syntactically_monotone(const Circuit& c);

bool has_negated_input(const Circuit& c, VarIndex var);

/// Drops nodes unreachable from the output, keeping relative order.
Circuit prune(const Circuit& c);

/// Appends nodes in definition order. Leaves (inputs, negated inputs,
/// constants) are shared; gates are always appended.
class CircuitBuilder {
 public:
  explicit CircuitBuilder(std::size_t num_vars) : num_vars_(num_vars) {}

  NodeId input(VarIndex var);
  NodeId neg_input(VarIndex var);
  NodeId constant(bool bit);
  NodeId make_not(NodeId child);
  NodeId make_and(NodeId l, NodeId r);
  NodeId make_or(NodeId l, NodeId r);

  /// Left fold; an empty list yields the identity constant.
  NodeId make_and(std::span<const NodeId> operands);
  NodeId make_or(std::span<const NodeId> operands);

  std::size_t num_vars() const { return num_vars_; }
  std::size_t node_count() const { return nodes_.size(); }

  Circuit build(NodeId output) &&;

 private:
  NodeId append(Node n);
  NodeId leaf(Node n);

  std::size_t num_vars_;
  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, NodeId> leaves_;
};

}  // namespace monoclique
