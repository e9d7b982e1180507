#ifndef SIGLAP_ERRORS_HPP
#define SIGLAP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace siglap {

// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (G-set files, vector files). Carries the 1-based
// line number when one is known, 0 otherwise.
class ParseError : public Error {
public:
  ParseError(const std::string& message, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + message
                       : message),
        line_(line) {}
  int line() const noexcept { return line_; }

private:
  int line_;
};

// Structurally valid input that violates a domain precondition
// (nonpositive weight, self-loop, isolated vertex, zero vector, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

// Input exceeds a hard size limit of an exhaustive routine.
class CapacityError : public Error {
public:
  using Error::Error;
};

// An iterative solver failed to reach its tolerance within its budget.
class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& message, double best_residual)
      : Error(message), best_residual_(best_residual) {}
  double best_residual() const noexcept { return best_residual_; }

private:
  double best_residual_;
};

// A guaranteed postcondition failed; indicates a bug, not bad input.
class ContractViolation : public Error {
public:
  using Error::Error;
};

}  // namespace siglap

#endif
