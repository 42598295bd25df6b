#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gradec {

enum class ErrorKind {
  SyntaxError,
  UndeclaredVariable,
  InexactDivision,
  DivisionByZero,
  NonInvertibleDenominator,
  RingMismatch,
  UnsupportedRing,
  NonSquare,
  AlgebraMismatch,
  FieldMismatch,
  NoSolution,
  NegativeMultiplicity,
  MissingAssignment,
  NonUnitAssignment,
  FractionFieldMismatch,
  NotAHomomorphism,
  LatticeNotFound,
  KernelNotNested,
  PhiNotDefinedOnB,
  UnsupportedField,
  DimensionBound,
  NotSplit,
  SplittingFailed,
  NotGradable,
  OracleMismatch,
  FactorizationFailure,
  SchemaError,
  ValidationError,
  UnknownName,
  UnknownFixture,
};

std::string_view error_kind_name(ErrorKind kind);

/// Every failure in the library is reported through this exception type.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind), detail_(message) {}

  ErrorKind kind() const noexcept { return kind_; }
  // The message without the kind prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::string detail_;
};

/// True for errors caused by malformed or inconsistent input rather than a
/// failed computation. The CLI maps these to exit code 1.
bool is_validation_kind(ErrorKind kind);

}  // namespace gradec
