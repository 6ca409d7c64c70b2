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

#include <iosfwd>
#include <string>
#include <vector>

namespace monoclique::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitRefuted = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Runs one command line. `args[0]` is the program name. Data goes to `out`,
/// diagnostics to `err`; `-` as a file name means `in` (or `out`).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace monoclique::cli
