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

#include <span>
#include <string>

#include "monoclique/verify.hpp"

namespace monoclique {

// Reports are line-oriented `key=value` records separated by one blank line.
// An absent witness is written as `witness=none`; the empty assignment (zero
// variables) as `witness=`. Budget-limited counts are written as
// `budget-exceeded`.

/// `# monoclique guard=<g> budget=<b>` so archived output is self-describing.
std::string format_header(std::size_t guard, std::size_t budget);

std::string format_equivalence_report(const EquivalenceReport& r);
std::string format_theorem_report(const TheoremReport& r);

/// Summary record (trials, checks, failures, seed) followed by one record per
/// failure.
std::string format_search_result(const SearchResult& r, const SearchOptions& options);

inline constexpr const char* kBlowupCsvHeader =
    "m,s,pivots,gates,dnf_monomials,monotone_monomials,canonical_count";
std::string format_blowup_csv(std::span<const BlowupRow> rows);

}  // namespace monoclique
