// Copyright 2026 The qgdec Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qgdec {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class SingularError : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. `line` is 1-based, or 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Two operators of a code that should commute do not.
class CommutationError : public ValidationError {
 public:
  CommutationError(const std::string& first, const std::string& second)
      : ValidationError(first + " anticommutes with " + second), first_(first), second_(second) {}
  const std::string& first() const { return first_; }
  const std::string& second() const { return second_; }

 private:
  std::string first_;
  std::string second_;
};

class DependenceError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

class LogicalPairingError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// An exhaustive enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class NormalFormError : public Error {
 public:
  using Error::Error;
};

/// An extraction failed its self-check. `index` names the first failing graph generator,
/// or is npos when the failure is structural (self-loop, asymmetry, partition).
class ExtractionInvalid : public Error {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  ExtractionInvalid(const std::string& what, std::size_t index = npos) : Error(what), index_(index) {}
  std::size_t index() const { return index_; }

 private:
  std::size_t index_;
};

class SyndromeMismatch : public Error {
 public:
  using Error::Error;
};

class NotCss : public Error {
 public:
  using Error::Error;
};

class InsufficientData : public Error {
 public:
  using Error::Error;
};

}  // namespace qgdec
