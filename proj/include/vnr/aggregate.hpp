#pragma once

#include <vector>

#include "vnr/leaderboard.hpp"
#include "vnr/outcome.hpp"
#include "vnr/profile.hpp"
#include "vnr/rule.hpp"

namespace vnr {

/// Task weights used by `mode`: the raw weights for basic and two-step, and
/// raw weight x 1/|group| for weighted mode. Ungrouped tasks count as
/// singleton groups.
std::vector<double> effective_weights(const Leaderboard& lb, AggregationMode mode);

/// Runs a profile-based rule (everything except the baselines). Scoring and
/// iterative rules reject incomplete profiles.
RuleOutcome apply_rule(const RankProfile& profile, const Rule& rule);

/// Basic: the rule on the whole leaderboard.
/// Weighted: the rule with group-scaled weights, so each group carries the
/// mean raw weight of its tasks.
/// Two-step: the rule per group yields one interim ranking ("elector") per
/// group; those rankings, weighted by the group's mean raw weight, form a new
/// profile the rule is applied to once more.
RuleOutcome aggregate(const Leaderboard& lb, const Rule& rule, AggregationMode mode = AggregationMode::Basic);

}  // namespace vnr
