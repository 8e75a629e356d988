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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace svcc {

/// Malformed or out-of-range input (files, edge lists, CLI arguments).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input file that does not parse. `line` is 1-based, 0 when unknown.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input in a layout this library does not read (dense arrays).
class UnsupportedFormat : public InputError {
 public:
  using InputError::InputError;
};

/// A caller broke a kernel precondition (length mismatch, unsorted delta).
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An algorithm produced state that breaks a pointer-graph invariant.
class InvariantViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace svcc
