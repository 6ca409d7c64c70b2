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


#include "monoclique/random.hpp"

#include <vector>

namespace monoclique {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  return rng() % bound;
}

Circuit random_circuit(const RandomCircuitOptions& options, Rng& rng) {
  if (options.num_vars == 0) throw std::invalid_argument("random_circuit needs variables");
  std::vector<Node> nodes;
  for (VarIndex j = 0; j < options.num_vars; ++j) nodes.push_back(Node::input(j));
  if (options.allow_negated_inputs) {
    for (VarIndex j = 0; j < options.num_vars; ++j)
      if (uniform_below(rng, 2)) nodes.push_back(Node::neg_input(j));
  }
  if (options.allow_constants && uniform_below(rng, 4) == 0)
    nodes.push_back(Node::constant(uniform_below(rng, 2) != 0));

  auto pick = [&]() -> NodeId {
    const std::size_t count = nodes.size();
    // Half the time pick among the last few nodes.
    if (count > 4 && uniform_below(rng, 2))
      return static_cast<NodeId>(count - 1 - uniform_below(rng, 4));
    return static_cast<NodeId>(uniform_below(rng, count));
  };

  for (std::size_t g = 0; g < options.gates; ++g) {
    const std::uint64_t kind = uniform_below(rng, options.allow_not ? 5 : 4);
    if (kind == 4) {
      nodes.push_back(Node::not_of(pick()));
    } else {
      const NodeId l = pick();
      const NodeId r = pick();
      nodes.push_back(kind < 2 ? Node::and_of(l, r) : Node::or_of(l, r));
    }
  }
  const auto output = static_cast<NodeId>(options.gates ? nodes.size() - 1
                                                        : uniform_below(rng, nodes.size()));
  return Circuit(options.num_vars, std::move(nodes), output);
}

}  // namespace monoclique
