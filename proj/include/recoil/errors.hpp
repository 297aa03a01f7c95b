// Copyright 2026 The recoil-lines Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace recoil {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the formula.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// The non-relativistic recoil model does not apply to the inputs.
class RegimeError : public Error {
  public:
    using Error::Error;
};

/// A ratio has a vanishing denominator.
class SingularityError : public Error {
  public:
    using Error::Error;
};

/// A numerical oracle did not reach its tolerance within its budget.
class AccuracyError : public Error {
  public:
    using Error::Error;
};

/// Well-formed input that violates a data invariant (duplicate names, non-positive masses).
class DataError : public Error {
  public:
    using Error::Error;
};

/// Malformed text input. Carries the 1-based line number.
class ParseError : public Error {
  public:
    ParseError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

}  // namespace recoil
