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
#include <random>

#include "monoclique/circuit.hpp"

namespace monoclique {

using Rng = std::mt19937_64;

/// splitmix64 step; used to derive independent per-trial seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Uniform in [0, bound). Modulo reduction keeps results identical across
/// standard libraries, unlike std::uniform_int_distribution.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

struct RandomCircuitOptions {
  std::size_t num_vars = 4;
  std::size_t gates = 16;
  bool allow_not = true;
  bool allow_negated_inputs = true;
  bool allow_constants = true;
};

/// Random single-output circuit. Leaves come first (one IN per variable, plus
/// optional NEG and CONST leaves), then `gates` gates whose operands are
/// drawn with a bias toward recent nodes so the result has some depth. The
/// output is the last gate, or a leaf when `gates == 0`.
Circuit random_circuit(const RandomCircuitOptions& options, Rng& rng);

}  // namespace monoclique
