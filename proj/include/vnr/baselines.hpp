#pragma once

#include <optional>
#include <span>
#include <vector>

#include "vnr/leaderboard.hpp"
#include "vnr/outcome.hpp"

namespace vnr {

inline constexpr double kDefaultGamma = 0.95;

// Utilitarian baselines. All read effective scores (minimize tasks negated)
// and require a complete leaderboard. `weights` overrides the task weights.

/// Task-weighted arithmetic mean, higher is better.
RuleOutcome mean_agg(const Leaderboard& lb, std::optional<std::span<const double>> weights = std::nullopt);
/// Task-weighted geometric mean, higher is better. Every score must be > 0.
RuleOutcome gmean_agg(const Leaderboard& lb, std::optional<std::span<const double>> weights = std::nullopt);
/// Task-weighted mean shortfall max(0, gamma - s) below the target `gamma`;
/// lower is better. Scores must lie in [0, 1].
RuleOutcome optimality_gap(const Leaderboard& lb, double gamma = kDefaultGamma,
                           std::optional<std::span<const double>> weights = std::nullopt);

/// Copy of `lb` with every score divided by `divisor` (e.g. 100 for percentages).
Leaderboard normalized(const Leaderboard& lb, double divisor = 100.0);

}  // namespace vnr
