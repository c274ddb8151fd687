#include "polycomp/error.hpp"

namespace polycomp {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::IncompatibleTag: return "IncompatibleTag";
    case ErrorCode::NotGCDDomain: return "NotGCDDomain";
    case ErrorCode::BothZero: return "BothZero";
    case ErrorCode::UnsupportedPair: return "UnsupportedPair";
    case ErrorCode::KEqualsL: return "KEqualsL";
    case ErrorCode::InconsistentFlags: return "InconsistentFlags";
    case ErrorCode::PairMismatch: return "PairMismatch";
    case ErrorCode::NotInRing: return "NotInRing";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::ZeroDivisor: return "ZeroDivisor";
    case ErrorCode::NotQuotientField: return "NotQuotientField";
    case ErrorCode::NotGCDConfiguration: return "NotGCDConfiguration";
    case ErrorCode::UnitDenominatorZero: return "UnitDenominatorZero";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::EmptyIdeal: return "EmptyIdeal";
    case ErrorCode::NotBezoutConfiguration: return "NotBezoutConfiguration";
    case ErrorCode::NotPruferConfiguration: return "NotPruferConfiguration";
    case ErrorCode::NotNGeneratorConfiguration: return "NotNGeneratorConfiguration";
    case ErrorCode::UnknownClassGroup: return "UnknownClassGroup";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorCode::InsufficientData: return "InsufficientData";
    case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

}  // namespace polycomp
