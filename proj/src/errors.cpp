#include "superkl/errors.hpp"

namespace superkl {

const char* error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::IntervalInfinite: return "IntervalInfinite";
    case ErrorKind::EmptyWeightSet: return "EmptyWeightSet";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::DeviationOutsideWindow: return "DeviationOutsideWindow";
    case ErrorKind::ColorOutsideInterval: return "ColorOutsideInterval";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::NonTriangularBar: return "NonTriangularBar";
    case ErrorKind::StabilityViolation: return "StabilityViolation";
    case ErrorKind::WindowExhausted: return "WindowExhausted";
    case ErrorKind::NotDominant: return "NotDominant";
    case ErrorKind::DuplicateCoordinate: return "DuplicateCoordinate";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace superkl
