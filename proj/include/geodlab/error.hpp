#pragma once

#include <stdexcept>
#include <string>

namespace geodlab {

enum class ErrorCode {
  InvalidArgument,
  NotHyperbolic,
  NoCrossing,
  InvalidSpec,
  DiscretenessCheckFailed,
  ParseError,
  EmptyAfterReduction,
  NotGeodesic,
  BudgetExceeded,
  FingerprintMismatch,
  CorruptFile,
  DegenerateCrossing,
  OddCrossingParity,
  SearchExhausted,
  PreconditionFailed,
  AxesDisjoint,
  NotFigureEight,
  NormalizationFailed,
  NotInCylinder,
  EpsilonTooLarge,
  NoCusp,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace geodlab
