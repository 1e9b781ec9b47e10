#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vnr {

enum class AggregationMode { Basic, Weighted, TwoStep };

std::string_view to_string(AggregationMode mode) noexcept;
AggregationMode parse_mode(std::string_view text);

/// Result of running one rule: tie-groups best first, optional per-system
/// scores, and a free-form trace.
///
/// Choice rules (the set-valued majority rules and Condorcet) put their
/// winning set in `ranking` and every other system in `unranked`. The
/// Condorcet rule is the only one allowed to return an empty `ranking`.
struct RuleOutcome {
  std::string rule_id;
  AggregationMode mode = AggregationMode::Basic;
  std::vector<std::vector<std::string>> ranking;
  std::map<std::string, double> scores;
  std::vector<std::string> unranked;
  std::vector<std::string> diagnostics;

  std::vector<std::string> winners() const { return ranking.empty() ? std::vector<std::string>{} : ranking.front(); }
  std::optional<double> score_of(std::string_view system) const;
  /// Every system the outcome mentions, ranked ones first.
  std::vector<std::string> systems() const;

  bool operator==(const RuleOutcome&) const = default;
};

/// `ranking` followed by `unranked` as one trailing tie-group.
std::vector<std::vector<std::string>> total_preorder(const RuleOutcome& outcome);

/// Standard competition rank of each system over `total_preorder`:
/// 1 + number of systems in strictly better groups.
std::map<std::string, std::size_t> competition_ranks(const RuleOutcome& outcome);

/// Builds an outcome from index tie-groups over `systems`. When `scores` is
/// non-empty it is indexed like `systems` and copied for every ranked system.
RuleOutcome make_outcome(std::string rule_id, std::span<const std::string> systems,
                         const std::vector<std::vector<std::size_t>>& groups, std::span<const double> scores = {});

/// Outcome for a choice rule: `winners` form the only tie-group.
RuleOutcome make_choice_outcome(std::string rule_id, std::span<const std::string> systems,
                                const std::vector<std::size_t>& winners);

}  // namespace vnr
