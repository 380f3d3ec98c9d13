#pragma once

#include <stdexcept>
#include <string>

namespace pluri {

// Base of everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Structurally malformed input (bad field ranges, unparsable data).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a mathematical constraint.
class Inconsistent : public Error {
 public:
  using Error::Error;
};

// The operation is not defined for this (valid) input.
class Unsupported : public Error {
 public:
  using Error::Error;
};

// A brute-force oracle was asked to search a space above its size limit.
class OracleBoundExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace pluri
