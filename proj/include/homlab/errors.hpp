#pragma once

#include <stdexcept>
#include <string>

namespace homlab {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (graph6, JSON graph form).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation was asked to run beyond its configured size guard.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// An explored-state budget was exhausted before the operation finished.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace homlab
