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

#include "monoclique/circuit.hpp"

namespace monoclique {

/// Pushes every NOT down to the inputs by building a positive and a negated
/// rail per node (De Morgan through AND/OR). NOT over an input becomes a
/// negated input node. Only rails reachable from the output are emitted, so
/// the result has at most two gates per AND/OR of the input and none per NOT.
Circuit standardize(const Circuit& c);

/// Removes constants from gate operands until a fixpoint:
/// And(x,0)=0, And(x,1)=x, Or(x,1)=1, Or(x,0)=x, Not(k)=!k.
/// The result contains a Const node only when the whole circuit is constant.
Circuit constant_fold(const Circuit& c);

/// Replaces every negated-input node of `var` by constant 1, then folds.
/// Positive occurrences of `var` are untouched. Requires a standard circuit.
Circuit substitute_literal(const Circuit& c, VarIndex var);

/// substitute_literal for each variable with a negated-input node, in
/// ascending index order. The result is syntactically monotone. Nothing is
/// claimed about the computed function.
Circuit monotonize_circuit_level(const Circuit& c);

}  // namespace monoclique
