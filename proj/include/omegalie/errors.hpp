#pragma once

#include <stdexcept>
#include <string>

namespace omegalie {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NonSquare : public Error {
 public:
  NonSquare() : Error("matrix is not square") {}
};

/// Structure constants or the bilinear form fail skew-symmetry.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class InvalidParameter : public Error {
 public:
  using Error::Error;
};

class NotClosed : public Error {
 public:
  using Error::Error;
};

class NotNilpotent : public Error {
 public:
  NotNilpotent() : Error("matrix is not nilpotent") {}
};

class MemberInvalid : public Error {
 public:
  using Error::Error;
};

class TargetInvalid : public Error {
 public:
  using Error::Error;
};

class ModuleInvalid : public Error {
 public:
  using Error::Error;
};

class InvalidAlpha : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace omegalie
