#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vnr {

enum class ErrorCode {
  InvalidLeaderboard,
  EmptySubset,
  MissingScore,
  UnknownSystem,
  UnknownRule,
  VectorLengthMismatch,
  InvalidScoringVector,
  MissingGroups,
  RuleUnsupportedForMode,
  InfeasibleBounds,
  NonPositiveScore,
  ScoreOutOfRange,
  MismatchedSystems,
  TooFewSystems,
  TooManyOmissions,
  InvalidArgument,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries a machine-readable code so the
/// CLI can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace vnr
