// Copyright 2026 The hrse-oracle Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hrse {

/** Base class of every error raised by the library. */
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/** Raised when a tree is not a rooted tree (cycle, several roots, bad ids). */
class StructuralError : public Error {
 public:
  using Error::Error;
};

/** Raised for malformed arguments to an operation. */
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/** Text-format error carrying a 1-based line and column. */
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(
            "line " + std::to_string(line) + ", column " +
            std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace hrse
