#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vnr/leaderboard.hpp"
#include "vnr/rational_simplex.hpp"

namespace vnr {

/// Row i compares `system` with `rivals[i]` task by task: +1 where `system`
/// is better, -1 where worse, 0 for equal or missing scores.
struct DominanceMatrix {
  std::string system;
  std::vector<std::string> rivals;
  std::vector<std::string> tasks;
  std::vector<std::vector<int>> entries;

  std::size_t rows() const noexcept { return entries.size(); }
  std::size_t cols() const noexcept { return tasks.size(); }
};

DominanceMatrix build_dominance_matrix(const Leaderboard& lb, std::string_view system);

/// Empty `lower` means w >= 0 and empty `upper` means no upper bound.
/// A nullopt entry leaves that side of the task's weight unbounded.
struct FeasibilityOptions {
  std::vector<std::optional<Rational>> lower;
  std::vector<std::optional<Rational>> upper;
  Rational strict_margin = 0;
  std::vector<Rational> objective;  // minimized when non-empty
};

enum class Prospect { Prospective, NonProspective };

struct FeasibilityResult {
  Prospect status = Prospect::NonProspective;
  std::optional<std::vector<Rational>> witness;
  /// Rows whose margin equals the strict margin exactly.
  std::vector<std::size_t> active_constraints;
  std::optional<Rational> objective_value;
  bool objective_unbounded = false;

  bool prospective() const noexcept { return status == Prospect::Prospective; }
  std::vector<double> witness_values() const;
};

/// Looks for w with G w >= margin, lower <= w <= upper, sum(w) = 1. Without an
/// objective, uniform weights are returned whenever they qualify; otherwise
/// the solver's vertex. Every witness is re-checked exactly before returning.
FeasibilityResult find_cw_weights(const DominanceMatrix& g, const FeasibilityOptions& opts = {});

/// Exact check of every constraint of the feasibility problem.
bool satisfies(const DominanceMatrix& g, const FeasibilityOptions& opts, std::span<const Rational> w);

/// find_cw_weights with default options.
bool is_prospective(const Leaderboard& lb, std::string_view system);

}  // namespace vnr
