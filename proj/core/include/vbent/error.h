// Copyright 2026 The vbent Authors.
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

#ifndef VBENT_ERROR_H_
#define VBENT_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vbent {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument is outside the domain of the operation (m does not divide n,
// inverse of zero, odd n where even is required, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A mathematical precondition of a construction does not hold. The message
// names the offending selector, pair or element.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A value predicted by a closed form disagrees with the exhaustive
// computation. Seeing one of these means a claimed identity was falsified.
class VerificationError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace vbent

#endif  // VBENT_ERROR_H_
