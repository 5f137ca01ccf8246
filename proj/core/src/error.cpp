#include "plift/error.hpp"

namespace plift {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::LengthOne: return "LengthOne";
    case ErrorKind::NotComposable: return "NotComposable";
    case ErrorKind::ZeroModule: return "ZeroModule";
    case ErrorKind::NotEndomorphism: return "NotEndomorphism";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::NotScalar: return "NotScalar";
    case ErrorKind::NoMatch: return "NoMatch";
    case ErrorKind::NotTotallyOrdered: return "NotTotallyOrdered";
    case ErrorKind::NonIntervalSummand: return "NonIntervalSummand";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::UnknownModule: return "UnknownModule";
    case ErrorKind::UnknownLift: return "UnknownLift";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

}  // namespace plift
