#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace maxplus {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad input: malformed text, mismatched dimensions, violated preconditions.
/// The CLI maps these to exit status 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

/// Size caps of the brute-force routines.
class CapacityError : public InputError {
 public:
  using InputError::InputError;
};

/// x does not satisfy A⊗x ≥ x (or is all-BOTTOM). `row` is the first
/// violated row, 0-based; equal to the dimension when x is all-BOTTOM.
class NotASolution : public InputError {
 public:
  NotASolution(const std::string& what, std::size_t row) : InputError(what), row_(row) {}
  std::size_t row() const noexcept { return row_; }

 private:
  std::size_t row_;
};

class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A structural fact that the theory guarantees did not hold. Seeing one of
/// these means a bug, not bad input. The CLI maps it to exit status 3.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace maxplus
