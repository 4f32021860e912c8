#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nuforge {

/// Failure categories. Each maps onto a CLI exit code.
enum class ErrorKind {
  InvalidInput,       ///< parse errors, bad weights, homogeneity violations
  NonIsolated,        ///< Jacobian ideal is not zero-dimensional
  BudgetExceeded,     ///< Groebner step budget exhausted
  Integrity,          ///< two independent routes disagreed: an internal bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInput : public Error {
 public:
  explicit InvalidInput(const std::string& what) : Error(ErrorKind::InvalidInput, what) {}
};

class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidInput(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class NonIsolatedSingularity : public Error {
 public:
  explicit NonIsolatedSingularity(const std::string& what) : Error(ErrorKind::NonIsolated, what) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error(ErrorKind::BudgetExceeded, what) {}
};

class IntegrityError : public Error {
 public:
  explicit IntegrityError(const std::string& what) : Error(ErrorKind::Integrity, what) {}
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid_input";
    case ErrorKind::NonIsolated: return "non_isolated";
    case ErrorKind::BudgetExceeded: return "budget_exceeded";
    case ErrorKind::Integrity: return "integrity_error";
  }
  return "unknown";
}

}  // namespace nuforge
