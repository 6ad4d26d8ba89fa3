// Copyright 2026 The Predclass Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PREDCLASS_ERROR_HPP_
#define PREDCLASS_ERROR_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace predclass {

// Base of every exception thrown by the library. The CLI maps the concrete
// subclasses onto distinct exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Data and labels (or two count tensors) do not describe the same items.
class PairingError : public Error {
 public:
  using Error::Error;
};

// Class, feature or item index outside its range.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation (psi <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Sufficient statistics that contradict each other.
class InconsistentStatistics : public Error {
 public:
  using Error::Error;
};

// An observed value code exceeds the configured alphabet size r_j.
class AlphabetViolation : public Error {
 public:
  using Error::Error;
};

// A finite-alphabet generator with a zero-probability category.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

// Exhaustive structure enumeration would exceed the configured cap.
class EnumerationTooLarge : public Error {
 public:
  EnumerationTooLarge(long double structure_count, std::uint64_t cap)
      : Error("structure space too large: k^n = " +
              FormatCount(structure_count) + " exceeds cap " +
              std::to_string(cap)),
        structure_count_(structure_count),
        cap_(cap) {}

  long double structure_count() const { return structure_count_; }
  std::uint64_t cap() const { return cap_; }

 private:
  static std::string FormatCount(long double v) {
    if (v < 1e18L) return std::to_string(static_cast<std::uint64_t>(v));
    return std::to_string(static_cast<double>(v));
  }

  long double structure_count_;
  std::uint64_t cap_;
};

// Malformed input file. Row and column are 1-based; 0 means "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t row = 0,
             std::size_t column = 0)
      : Error(Describe(what, row, column)), row_(row), column_(column) {}

  std::size_t row() const { return row_; }
  std::size_t column() const { return column_; }

 private:
  static std::string Describe(const std::string& what, std::size_t row,
                              std::size_t column) {
    std::string out = what;
    if (row != 0) out += " (row " + std::to_string(row);
    if (column != 0) out += ", column " + std::to_string(column);
    if (row != 0) out += ")";
    return out;
  }

  std::size_t row_;
  std::size_t column_;
};

// Ragged rows in an input table.
class ShapeError : public ParseError {
 public:
  using ParseError::ParseError;
};

// An input file with no content at all (not even a header).
class EmptyInputError : public ParseError {
 public:
  using ParseError::ParseError;
};

// Missing or contradictory run configuration.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace predclass

#endif  // PREDCLASS_ERROR_HPP_
