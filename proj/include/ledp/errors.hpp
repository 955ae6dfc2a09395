// Copyright 2026 The ledpgraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEDP_ERRORS_HPP_
#define LEDP_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ledp {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Input n < 2, where level counts based on log n are undefined.
class DegenerateInputError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Structurally invalid input: self-loops, non-permutations, bad specs.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Invalid run configuration; the CLI maps it to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class MalformedInputError : public std::runtime_error {
 public:
  MalformedInputError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

class BudgetExceededError : public std::runtime_error {
 public:
  explicit BudgetExceededError(const std::string& label)
      : std::runtime_error("privacy budget exceeded by charge '" + label +
                           "'"),
        label_(label) {}
  const std::string& label() const { return label_; }

 private:
  std::string label_;
};

}  // namespace ledp

#endif  // LEDP_ERRORS_HPP_
