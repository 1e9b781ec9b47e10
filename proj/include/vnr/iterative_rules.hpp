#pragma once

#include <string>
#include <vector>

#include "vnr/outcome.hpp"
#include "vnr/profile.hpp"
#include "vnr/rule.hpp"

namespace vnr {

/// One round of an iterative rule.
struct EliminationRound {
  std::vector<std::string> survivors;
  std::vector<double> vector;
  std::vector<double> scores;  // aligned with survivors
  std::vector<std::string> eliminated;
  std::string note;
};

/// Round-by-round record of how the winners were reached.
struct EliminationTrace {
  std::vector<EliminationRound> rounds;
  std::vector<std::string> winners;
};

struct IterativeResult {
  RuleOutcome outcome;
  EliminationTrace trace;
};

// All rules require a complete profile (MissingScore otherwise). The trace
// covers the winner-selection pass; full rankings are derived from it.

/// Antiplurality first; ties among the top systems are broken with
/// (1,...,1,0,0), ..., (1,0,...,0) on the original profile. Later tie-groups
/// repeat the selection on the systems not yet ranked.
IterativeResult threshold_rule(const RankProfile& profile);
/// Repeated Borda over survivors, dropping every minimum scorer.
IterativeResult baldwin_rule(const RankProfile& profile);
/// Repeated Plurality over survivors, dropping every minimum scorer.
IterativeResult hare_rule(const RankProfile& profile);
/// A survivor ranked first on more than half the total weight wins; otherwise
/// every survivor with the most last-place weight is dropped.
IterativeResult coombs_rule(const RankProfile& profile);
/// Repeated Borda over survivors, dropping everyone strictly below the mean.
IterativeResult nanson_rule(const RankProfile& profile);
/// The strict Condorcet winner if there is one, otherwise Borda.
IterativeResult black_rule(const RankProfile& profile);

IterativeResult apply_iterative_rule(const RankProfile& profile, const Rule& rule);

/// Human-readable lines for `RuleOutcome::diagnostics`.
std::vector<std::string> describe(const EliminationTrace& trace);

}  // namespace vnr
