#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace toricq {

enum class ErrorCode {
  // fan validation
  DimensionMismatch,
  NonPrimitiveRay,
  NonUnimodularCone,
  NotComplete,
  NotAFan,
  // Picard lattice
  InconsistentRelation,
  NotAmplePolarization,
  BasisMismatch,
  // cohomology
  InconsistentNormalization,
  // series
  IncompatibleTruncation,
  NotInvertible,
  // mirror map
  MirrorMapNotSmall,
  MirrorMapNotInvertible,
  // generic input problems
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code);

/// The single exception type thrown by the library. `code()` is stable and is
/// what callers (and the CLI exit-code mapping) dispatch on; `what()` names
/// the offending object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace toricq
