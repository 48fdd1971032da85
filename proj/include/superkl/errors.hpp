#pragma once

#include <stdexcept>
#include <string>

namespace superkl {

enum class ErrorKind {
  NotDivisible,
  IntervalInfinite,
  EmptyWeightSet,
  DegreeMismatch,
  TypeMismatch,
  DeviationOutsideWindow,
  ColorOutsideInterval,
  ContextMismatch,
  NonTriangularBar,
  StabilityViolation,
  WindowExhausted,
  NotDominant,
  DuplicateCoordinate,
  BudgetExceeded,
  ParseError,
  InvalidArgument,
};

const char* error_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace superkl
