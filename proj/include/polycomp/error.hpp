#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polycomp {

enum class ErrorCode {
  DivisionByZero,
  FieldMismatch,
  IncompatibleTag,
  NotGCDDomain,
  BothZero,
  UnsupportedPair,
  KEqualsL,
  InconsistentFlags,
  PairMismatch,
  NotInRing,
  ZeroElement,
  ZeroDivisor,
  NotQuotientField,
  NotGCDConfiguration,
  UnitDenominatorZero,
  ZeroInput,
  EmptyIdeal,
  NotBezoutConfiguration,
  NotPruferConfiguration,
  NotNGeneratorConfiguration,
  UnknownClassGroup,
  NotPrime,
  UnsupportedDegree,
  InsufficientData,
  InternalInvariant,
};

std::string_view error_name(ErrorCode code) noexcept;

/// Domain error raised by every library operation. The CLI maps these to
/// exit code 3 and prints error_name(code()).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view name() const noexcept { return error_name(code_); }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

// Postcondition checks that must hold for every licensed input. A failure
// here is a bug in the library, never a user error.
inline void ensure(bool condition, const char* what) {
  if (!condition) throw Error(ErrorCode::InternalInvariant, what);
}

}  // namespace polycomp
