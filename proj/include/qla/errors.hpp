#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qla {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class PoleError : public Error {
 public:
  explicit PoleError(const std::string& den)
      : Error("pole: denominator " + den + " vanishes at the evaluation point"),
        denominator(den) {}
  std::string denominator;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t pos)
      : Error("parse error at position " + std::to_string(pos) + ": " + what),
        position(pos) {}
  std::size_t position;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

// Raised when a computed object lacks an assumed structure (kernel size,
// proportionality to the identity, invertibility of a basis change, ...).
class StructureError : public Error {
 public:
  using Error::Error;
};

}  // namespace qla
