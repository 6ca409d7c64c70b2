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


#include "monoclique/netlist.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <unordered_map>
#include <vector>

namespace monoclique {
namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

std::optional<std::uint64_t> parse_uint(std::string_view s) {
  if (s.empty()) return std::nullopt;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

bool is_node_name(std::string_view s) {
  return s.size() >= 2 && s[0] == 'n' && parse_uint(s.substr(1)).has_value();
}

}  // namespace

Circuit parse_netlist(std::string_view text) {
  std::optional<std::size_t> num_vars;
  std::optional<NodeId> output;
  std::vector<Node> nodes;
  std::unordered_map<std::string, NodeId> ids;

  auto lookup = [&](std::string_view name, std::size_t line) -> NodeId {
    if (!is_node_name(name)) throw ParseError(line, "bad node id '" + std::string(name) + "'");
    auto it = ids.find(std::string(name));
    if (it == ids.end()) throw ParseError(line, "undefined node " + std::string(name));
    return it->second;
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto w = split_words(line);
    if (w.empty()) continue;

    if (output) throw ParseError(line_no, "content after output line");

    if (w[0] == "inputs") {
      if (num_vars) throw ParseError(line_no, "duplicate inputs line");
      if (!nodes.empty()) throw ParseError(line_no, "inputs must precede nodes");
      auto n = w.size() == 2 ? parse_uint(w[1]) : std::nullopt;
      if (!n) throw ParseError(line_no, "expected 'inputs <n>'");
      num_vars = *n;
      continue;
    }
    if (!num_vars) throw ParseError(line_no, "expected 'inputs <n>' first");

    if (w[0] == "output") {
      if (w.size() != 2) throw ParseError(line_no, "expected 'output <id>'");
      output = lookup(w[1], line_no);
      continue;
    }

    if (w.size() < 3 || w[1] != "=") throw ParseError(line_no, "expected '<id> = <OP> ...'");
    if (!is_node_name(w[0])) throw ParseError(line_no, "bad node id '" + std::string(w[0]) + "'");
    if (ids.count(std::string(w[0])))
      throw ParseError(line_no, "node " + std::string(w[0]) + " defined twice");

    const std::string_view op = w[2];
    const std::size_t argc = w.size() - 3;
    auto want = [&](std::size_t k) {
      if (argc != k) {
        throw ParseError(line_no, std::string(op) + " takes " + std::to_string(k) +
                                      " operand(s), got " + std::to_string(argc));
      }
    };
    auto var_arg = [&]() -> VarIndex {
      auto k = parse_uint(w[3]);
      if (!k) throw ParseError(line_no, "bad variable index '" + std::string(w[3]) + "'");
      if (*k >= *num_vars)
        throw ParseError(line_no, "variable out of range: " + std::string(w[3]));
      return static_cast<VarIndex>(*k);
    };

    Node node;
    if (op == "IN") {
      want(1);
      node = Node::input(var_arg());
    } else if (op == "NEG") {
      want(1);
      node = Node::neg_input(var_arg());
    } else if (op == "CONST") {
      want(1);
      if (w[3] != "0" && w[3] != "1") throw ParseError(line_no, "CONST takes 0 or 1");
      node = Node::constant(w[3] == "1");
    } else if (op == "NOT") {
      want(1);
      node = Node::not_of(lookup(w[3], line_no));
    } else if (op == "AND") {
      want(2);
      node = Node::and_of(lookup(w[3], line_no), lookup(w[4], line_no));
    } else if (op == "OR") {
      want(2);
      node = Node::or_of(lookup(w[3], line_no), lookup(w[4], line_no));
    } else {
      throw ParseError(line_no, "unknown operator '" + std::string(op) + "'");
    }
    ids.emplace(std::string(w[0]), static_cast<NodeId>(nodes.size()));
    nodes.push_back(node);
  }

  if (!num_vars) throw ParseError(0, "missing 'inputs <n>' line");
  if (!output) throw ParseError(0, "missing 'output <id>' line");
  return Circuit(*num_vars, std::move(nodes), *output);
}

std::string serialize_netlist(const Circuit& c) {
  require_valid(c);
  std::ostringstream out;
  out << "inputs " << c.num_vars() << '\n';
  const auto nodes = c.nodes();
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const Node& n = nodes[i];
    out << 'n' << i << " = " << op_name(n.op);
    switch (n.op) {
      case Op::Input:
      case Op::NegInput:
      case Op::Const:
        out << ' ' << n.a;
        break;
      case Op::Not:
        out << " n" << n.a;
        break;
      case Op::And:
      case Op::Or:
        out << " n" << n.a << " n" << n.b;
        break;
    }
    out << '\n';
  }
  out << "output n" << c.output() << '\n';
  return out.str();
}

}  // namespace monoclique
