#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace plift {

enum class ErrorKind {
  InvalidArgument,
  ShapeMismatch,
  NotAUnit,
  NotInvertible,
  LengthOne,
  NotComposable,
  ZeroModule,
  NotEndomorphism,
  HypothesisViolated,
  NotScalar,
  NoMatch,
  NotTotallyOrdered,
  NonIntervalSummand,
  ParseError,
  ValidationError,
  UnknownModule,
  UnknownLift,
  Internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Result of the validate_* family. `kind` is the failing axiom (for example
// "MaxIdealNotNilpotent"), `detail` names the witness.
struct Diagnostic {
  std::string kind;
  std::string detail;

  std::string to_string() const { return kind + ": " + detail; }
};

// Empty when the object is valid.
using Validation = std::optional<Diagnostic>;

}  // namespace plift
