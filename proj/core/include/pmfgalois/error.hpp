#pragma once

#include <stdexcept>
#include <string>

namespace pmfgalois {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arity mismatch or a shape outside the configured caps.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Index, element or tuple digit out of range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its step budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

// A structure violates its axioms.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pmfgalois
