// Exception hierarchy shared by all clwave modules.

#pragma once

#include <stdexcept>
#include <string>

namespace clw {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Operands belong to algebras of different dimension.
class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

// Fields defined on incompatible grids.
class GridMismatch : public Error {
 public:
  using Error::Error;
};

class NonInvertible : public Error {
 public:
  using Error::Error;
};

// invert_grade01 applied to a multivector with grade >= 2 content.
class UnsupportedGradeContent : public Error {
 public:
  using Error::Error;
};

class NotAdmissible : public Error {
 public:
  using Error::Error;
};

// Mixed-parity mother wavelet in an even-dimensional algebra.
class ParityViolation : public Error {
 public:
  using Error::Error;
};

class NonScalarConstant : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace clw
