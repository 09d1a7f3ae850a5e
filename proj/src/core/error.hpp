#pragma once

#include <stdexcept>
#include <string>

namespace kmh {

enum class ErrorCode {
  DiagonalNot2,
  SignViolation,
  ZeroPatternViolation,
  PairingMismatch,
  IndependenceViolation,
  ParameterConstraintViolation,
  ParameterModulusViolation,
  NotARealCoroot,
  PoleAtCharacter,
  IncompatibleData,
  WordNotReduced,
  NotInBLH,
  DomainNotLowerSet,
  NotInU_C,
  NotInK_tau,
  DecompositionFailure,
  NotInGenWeightSpace,
  NotInItgSpan,
  KacMoodyViolation,
  ConfigError,
  BoundTooSmall,
  FieldMismatch,
  Overflow,
  Internal,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace kmh
