// Copyright 2026 The skewen Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace skewen {

// Precondition failures raise std::invalid_argument (bad parameters) or
// std::domain_error (input outside an operation's graph class, e.g. a
// non-unicyclic graph handed to a unicyclic-only routine).

/// A mathematical invariant that must hold for every input was observed to
/// fail (engine disagreement, negative coefficient, overflow).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed graph file. `line()` is 1-based; 0 when the error is not tied
/// to a single line.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace skewen
