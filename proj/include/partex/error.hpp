// Copyright 2026 The partex Authors
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

#include <stdexcept>
#include <string>

namespace partex {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parameter is outside the range an operation accepts.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Materialising the request would exceed the configured vector budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// An operation's documented precondition does not hold for its input.
class PreconditionViolated : public Error {
 public:
  using Error::Error;
};

/// A result contradicts a property that must hold by construction.
class InternalConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Malformed family text. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

}  // namespace partex
