#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qubeam {

enum class ErrorCode {
  // parameter validation
  NonPositive,
  DegenerateFrequencies,
  UnorderedFrequencies,
  NearResonance,
  ZeroLightFront,
  // dispersion
  PoleEvaluation,
  SingularDenominator,
  BracketFailure,
  NonConvergence,
  // transformation and state
  NegativeRadicand,
  ZeroNorm,
  UnsupportedConfig,
  // measures
  DomainError,
  ResonancePole,
  RangeViolation,
  // configuration and sweeps
  ParseError,
  ValidationError,
  IoError,
  AllRowsFailed,
};

std::string_view to_string(ErrorCode code) noexcept;

// Exit status class used by the CLI: 1 for input problems, 2 for failures
// inside the computation.
bool is_input_error(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  // Same error, prefixed with the pipeline stage it came from.
  Error with_stage(std::string_view stage) const {
    return Error(code_, std::string(stage) + ": " + detail());
  }

  std::string detail() const {
    std::string msg = what();
    auto prefix = std::string(to_string(code_)) + ": ";
    return msg.rfind(prefix, 0) == 0 ? msg.substr(prefix.size()) : msg;
  }

private:
  ErrorCode code_;
};

}  // namespace qubeam
