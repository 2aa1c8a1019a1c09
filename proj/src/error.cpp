#include "qubeam/error.hpp"

namespace qubeam {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositive: return "NonPositive";
    case ErrorCode::DegenerateFrequencies: return "DegenerateFrequencies";
    case ErrorCode::UnorderedFrequencies: return "UnorderedFrequencies";
    case ErrorCode::NearResonance: return "NearResonance";
    case ErrorCode::ZeroLightFront: return "ZeroLightFront";
    case ErrorCode::PoleEvaluation: return "PoleEvaluation";
    case ErrorCode::SingularDenominator: return "SingularDenominator";
    case ErrorCode::BracketFailure: return "BracketFailure";
    case ErrorCode::NonConvergence: return "NonConvergence";
    case ErrorCode::NegativeRadicand: return "NegativeRadicand";
    case ErrorCode::ZeroNorm: return "ZeroNorm";
    case ErrorCode::UnsupportedConfig: return "UnsupportedConfig";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::ResonancePole: return "ResonancePole";
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
    case ErrorCode::IoError: return "IoError";
    case ErrorCode::AllRowsFailed: return "AllRowsFailed";
  }
  return "Unknown";
}

bool is_input_error(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NonPositive:
    case ErrorCode::DegenerateFrequencies:
    case ErrorCode::UnorderedFrequencies:
    case ErrorCode::NearResonance:
    case ErrorCode::ZeroLightFront:
    case ErrorCode::ParseError:
    case ErrorCode::ValidationError:
      return true;
    default:
      return false;
  }
}

}  // namespace qubeam
