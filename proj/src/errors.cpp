#include "vnr/errors.hpp"

namespace vnr {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidLeaderboard: return "InvalidLeaderboard";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::MissingScore: return "MissingScore";
    case ErrorCode::UnknownSystem: return "UnknownSystem";
    case ErrorCode::UnknownRule: return "UnknownRule";
    case ErrorCode::VectorLengthMismatch: return "VectorLengthMismatch";
    case ErrorCode::InvalidScoringVector: return "InvalidScoringVector";
    case ErrorCode::MissingGroups: return "MissingGroups";
    case ErrorCode::RuleUnsupportedForMode: return "RuleUnsupportedForMode";
    case ErrorCode::InfeasibleBounds: return "InfeasibleBounds";
    case ErrorCode::NonPositiveScore: return "NonPositiveScore";
    case ErrorCode::ScoreOutOfRange: return "ScoreOutOfRange";
    case ErrorCode::MismatchedSystems: return "MismatchedSystems";
    case ErrorCode::TooFewSystems: return "TooFewSystems";
    case ErrorCode::TooManyOmissions: return "TooManyOmissions";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace vnr
