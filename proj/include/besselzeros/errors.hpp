#pragma once

#include <stdexcept>
#include <string>

namespace besselzeros {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An argument outside the documented domain (s < 1, z < 1, R <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Bracket failures, iteration limits, unreachable precision, division by zero.
class NumericFailure : public Error {
 public:
  using Error::Error;
};

// A table cell needs an offline reference value that is not loaded.
class FixtureMissing : public Error {
 public:
  using Error::Error;
};

// Symbolic generation produced an element beyond the configured term limit.
class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

// Malformed or unsupported cache / fixture file.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace besselzeros
