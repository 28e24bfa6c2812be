#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace novelty {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition or a type invariant was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The data carry no information for the requested estimate
/// (zero variance everywhere, no first-minute growth, too few points).
class DegenerateData : public Error {
 public:
  using Error::Error;
};

/// A stretched-exponential fit produced a non-positive rate.
class NotDecaying : public Error {
 public:
  using Error::Error;
};

/// Malformed input file. `row()` is the 1-based data row (header excluded),
/// or 0 when the problem is not tied to a row.
class ParseError : public Error {
 public:
  ParseError(std::size_t row, const std::string& what)
      : Error(row == 0 ? what : "row " + std::to_string(row) + ": " + what), row_(row) {}

  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

}  // namespace novelty
