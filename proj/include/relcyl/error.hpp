#pragma once

#include <stdexcept>
#include <string>

namespace relcyl {

// Base of every error thrown by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operator, variable or node index is outside its declared range.
class IndexError : public Error {
 public:
  using Error::Error;
};

// The algebra lacks an operator the request needs.
class SignatureError : public Error {
 public:
  using Error::Error;
};

// Malformed file content, term syntax, or structurally inconsistent input.
class FormatError : public Error {
 public:
  using Error::Error;
};

// An exhaustive search would exceed its configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// A precondition of a construction does not hold for the given arguments.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// An internal invariant failed; signals an algebra outside the class or a bug.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace relcyl
