#include "geodlab/error.hpp"

namespace geodlab {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotHyperbolic: return "NotHyperbolic";
    case ErrorCode::NoCrossing: return "NoCrossing";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::DiscretenessCheckFailed: return "DiscretenessCheckFailed";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::EmptyAfterReduction: return "EmptyAfterReduction";
    case ErrorCode::NotGeodesic: return "NotGeodesic";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::FingerprintMismatch: return "FingerprintMismatch";
    case ErrorCode::CorruptFile: return "CorruptFile";
    case ErrorCode::DegenerateCrossing: return "DegenerateCrossing";
    case ErrorCode::OddCrossingParity: return "OddCrossingParity";
    case ErrorCode::SearchExhausted: return "SearchExhausted";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::AxesDisjoint: return "AxesDisjoint";
    case ErrorCode::NotFigureEight: return "NotFigureEight";
    case ErrorCode::NormalizationFailed: return "NormalizationFailed";
    case ErrorCode::NotInCylinder: return "NotInCylinder";
    case ErrorCode::EpsilonTooLarge: return "EpsilonTooLarge";
    case ErrorCode::NoCusp: return "NoCusp";
  }
  return "Unknown";
}

}  // namespace geodlab
