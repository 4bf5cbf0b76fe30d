#pragma once

#include <stdexcept>
#include <string>

namespace dbracket {

// Every error raised by the library derives from Error so callers (the CLI in
// particular) can catch one type.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SingularMatrix : public Error {
public:
  SingularMatrix() : Error("matrix is singular") {}
};

class NonSquare : public Error {
public:
  NonSquare(std::size_t rows, std::size_t cols)
      : Error("matrix is not square: " + std::to_string(rows) + "x" + std::to_string(cols)) {}
};

class ShapeMismatch : public Error {
public:
  using Error::Error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

class NotDegreeMinusOne : public Error {
public:
  NotDegreeMinusOne() : Error("argument is not homogeneous of degree -1") {}
};

class RankOutOfRange : public Error {
public:
  using Error::Error;
};

class NotASubalgebra : public Error {
public:
  NotASubalgebra() : Error("subspace is not closed under the bracket") {}
};

class VerificationFailure : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  using Error::Error;
};

}  // namespace dbracket
