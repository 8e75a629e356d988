/*
 *   Copyright 2026 The svcc Authors
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
 */

#pragma once

#include <exception>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace svcc::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,
  kVerificationFailure = 2,
  kInvariantViolation = 3,
};

/// Raised when --verify finds a labeling that differs from the oracle.
struct VerificationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Maps an exception escaping a command to its exit code and prints a
/// one-line diagnostic. Unknown exception types are rethrown.
int exit_code_for(std::exception_ptr failure, std::ostream& err);

/// Entry point shared by the svcc binary and the tests. `args` excludes the
/// program name. Reports and CSVs without an --output path go to `out`;
/// diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace svcc::cli
