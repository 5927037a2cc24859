#pragma once

#include <stdexcept>
#include <string>

namespace lrj {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numeric evaluation hit a zero denominator.  `subexpression` is the
/// rendering of the offending denominator.
class EvalError : public Error {
 public:
  EvalError(const std::string& what, std::string subexpression)
      : Error(what), subexpression_(std::move(subexpression)) {}
  const std::string& subexpression() const { return subexpression_; }

 private:
  std::string subexpression_;
};

/// A symbolic quotient whose denominator is identically zero.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A linear system (Reeb field, Hamiltonian operators, inverse of a form) has
/// no unique solution.  `witness` renders the vanishing Pfaffian or pivot.
class DegenerateError : public Error {
 public:
  DegenerateError(const std::string& what, std::string witness)
      : Error(what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace lrj
