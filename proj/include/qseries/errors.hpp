#pragma once

#include <stdexcept>
#include <string>

namespace qseries {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vanishing denominator factor (or, under a strict factor policy, any
/// factor closer to zero than the configured distance).
class PoleError : public Error {
 public:
  explicit PoleError(const std::string& what, int argument_index = -1)
      : Error(what), argument_index_(argument_index) {}
  int argument_index() const { return argument_index_; }

 private:
  int argument_index_;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// A truncation budget (factors or terms) ran out before convergence.
class BudgetError : public Error {
 public:
  using Error::Error;
};

class DivergenceError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class UnknownIdentity : public Error {
 public:
  explicit UnknownIdentity(const std::string& id) : Error("unknown identity: " + id) {}
};

class ExhaustionError : public Error {
 public:
  using Error::Error;
};

}  // namespace qseries
