#pragma once

#include <stdexcept>
#include <string>

namespace trisect {

/// Base class for all errors thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class WrongCharacteristic : public Error {
 public:
  using Error::Error;
};

class WrongParity : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Dimension or field mismatch between multilinear-algebra operands.
class Mismatch : public Error {
 public:
  using Error::Error;
};

class ZeroVector : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

class NotASpread : public Error {
 public:
  using Error::Error;
};

class TooLarge : public Error {
 public:
  using Error::Error;
};

/// A postcondition that cannot fail for correct arithmetic did fail.
class InternalInvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace trisect
