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
#include <stdexcept>
#include <string>
#include <string_view>

#include "monoclique/circuit.hpp"

namespace monoclique {

/// Syntax or semantic error in netlist text. `line()` is 1-based; 0 means the
/// error is not tied to a line (e.g. missing `output`).
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Line-oriented format:
//
//   inputs <n>
//   n0 = IN 0
//   n1 = NEG 1
//   n2 = AND n0 n1
//   output n2
//
// Ids are `n<decimal>` and must be defined before use; `#` starts a comment.
// Parsed ids are renumbered densely in definition order.
Circuit parse_netlist(std::string_view text);

/// Canonical text: node i is written as `n<i>`, one node per line.
std::string serialize_netlist(const Circuit& c);

}  // namespace monoclique
