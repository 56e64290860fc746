#pragma once

#include <stdexcept>
#include <string>

namespace premon {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation that requires a preorder non-unit was handed a unit.
class NotANonUnit : public Error {
 public:
  using Error::Error;
};

/// A query whose answer must be definite could not be settled within budget.
class BudgetExhausted : public Error {
 public:
  using Error::Error;
};

/// Structural validation failure (bad Cayley table, bad sigma, bad polynomial).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual or JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace premon
