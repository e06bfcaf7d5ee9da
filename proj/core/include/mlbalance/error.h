// Copyright 2026 The mlbalance Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MLBALANCE_ERROR_H_
#define MLBALANCE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mlbalance {

// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed ARFF / XML input. `line()` is 1-based, 0 when not tied to a line.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& message, std::size_t line = 0)
      : Error(line == 0 ? message
                        : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

// A caller-supplied parameter is outside its documented domain.
class InvalidParameterError : public Error {
 public:
  using Error::Error;
};

// A metric is mathematically undefined for the given data, e.g. IRLbl of a
// label that never appears.
class UndefinedMetricError : public Error {
 public:
  using Error::Error;
};

}  // namespace mlbalance

#endif  // MLBALANCE_ERROR_H_
