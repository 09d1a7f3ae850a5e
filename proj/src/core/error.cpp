#include "error.hpp"

namespace kmh {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DiagonalNot2: return "DiagonalNot2";
    case ErrorCode::SignViolation: return "SignViolation";
    case ErrorCode::ZeroPatternViolation: return "ZeroPatternViolation";
    case ErrorCode::PairingMismatch: return "PairingMismatch";
    case ErrorCode::IndependenceViolation: return "IndependenceViolation";
    case ErrorCode::ParameterConstraintViolation: return "ParameterConstraintViolation";
    case ErrorCode::ParameterModulusViolation: return "ParameterModulusViolation";
    case ErrorCode::NotARealCoroot: return "NotARealCoroot";
    case ErrorCode::PoleAtCharacter: return "PoleAtCharacter";
    case ErrorCode::IncompatibleData: return "IncompatibleData";
    case ErrorCode::WordNotReduced: return "WordNotReduced";
    case ErrorCode::NotInBLH: return "NotInBLH";
    case ErrorCode::DomainNotLowerSet: return "DomainNotLowerSet";
    case ErrorCode::NotInU_C: return "NotInU_C";
    case ErrorCode::NotInK_tau: return "NotInK_tau";
    case ErrorCode::DecompositionFailure: return "DecompositionFailure";
    case ErrorCode::NotInGenWeightSpace: return "NotInGenWeightSpace";
    case ErrorCode::NotInItgSpan: return "NotInItgSpan";
    case ErrorCode::KacMoodyViolation: return "KacMoodyViolation";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace kmh
