#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace vnr {

enum class RuleKind {
  // scoring
  Plurality,
  TwoApproval,
  Antiplurality,
  Borda,
  Dowdall,
  CustomVector,
  // iterative / hybrid
  Threshold,
  Baldwin,
  Hare,
  Coombs,
  Nanson,
  Black,
  // majority relation
  Condorcet,
  CopelandI,
  CopelandII,
  CopelandIII,
  Minimax,
  MinimalDominantSet,
  MinimalUndominatedSet,
  UncoveredSetI,
  UncoveredSetII,
  Richelson,
  Fishburn,
  MinimalWeaklyStableSet,
  // baselines
  ArithmeticMean,
  GeometricMean,
  OptimalityGap,
};

enum class RuleFamily { Scoring, Iterative, Majority, Baseline };

/// A rule plus its parameters. `vector` is used only by CustomVector and
/// `gamma` only by OptimalityGap.
struct Rule {
  RuleKind kind = RuleKind::Borda;
  std::vector<double> vector;
  double gamma = 0.95;

  bool operator==(const Rule&) const = default;
};

/// Accepts the ids listed by `registered_rule_ids()`, plus
/// `custom:<c1>,<c2>,...` and `og:<gamma>`.
Rule parse_rule(std::string_view id);
std::string rule_id(const Rule& rule);
std::vector<std::string> registered_rule_ids();

RuleFamily family(RuleKind kind) noexcept;
/// Choice rules: produce a winning set and leave everyone else unranked.
bool is_choice_rule(RuleKind kind) noexcept;
/// Rules that read the majority relation and therefore tolerate missing cells.
bool accepts_missing(RuleKind kind) noexcept;

}  // namespace vnr
