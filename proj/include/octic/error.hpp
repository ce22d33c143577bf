#pragma once

#include <stdexcept>
#include <string>

namespace octic {

enum class ErrorKind {
  NonSquarefree,
  BasisMismatch,
  FieldMismatch,
  NotDivisible,
  ParseError,
  StructureMismatch,
  ZeroPolynomial,
  NotMonic,
  NotPrimitive,
  NotPrimitiveAbs,
  InexactSqrt,
  InexactDivision,
  NotSplit,
  InvalidFamily,
  CompositeNeedsIngest,
  NonIntegerCoefficients,
  WrongDegree,
  CandidateMismatch,
  RelIndexNotOne,
  InvalidArgument,
  Io,
  Internal,
};

const char* to_string(ErrorKind kind);

// Single exception type for the library; the kind carries the contract
// violation so callers (and the C API) can dispatch on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace octic
