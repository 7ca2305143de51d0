#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ramsey {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller supplied arguments that violate an operation's precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// Input order exceeds the limit of an exact (exponential) computation.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

/// Minimum degree below half the order; no Hamiltonian cycle is attempted.
class DegreeConditionError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// An internal guarantee did not hold. Always an implementation bug, never a
/// property of valid input.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// A brute-force search or exhaustive enumeration would exceed its budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A search range was exhausted without bracketing the answer.
class RangeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace ramsey
