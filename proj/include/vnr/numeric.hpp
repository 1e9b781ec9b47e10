#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace vnr {

/// Relative tolerance under which two aggregated scores are considered tied.
/// Rule scores are sums of weighted fractions, so summation order alone can
/// perturb the last bits.
inline constexpr double kTieTolerance = 1e-9;

inline double tie_slack(double scale) noexcept { return kTieTolerance * std::max(1.0, std::abs(scale)); }

inline bool tied(double a, double b, double scale) noexcept { return std::abs(a - b) <= tie_slack(scale); }

/// Largest magnitude in `values`, used as the scale for `tied`.
inline double magnitude(std::span<const double> values) noexcept {
  double m = 0.0;
  for (double v : values) m = std::max(m, std::abs(v));
  return m;
}

/// Groups `items` (indices into `scores`) into tie-groups ordered best first.
/// `higher_is_better` selects the sort direction. Members of a group keep the
/// relative order they had in `items`.
std::vector<std::vector<std::size_t>> group_by_score(std::span<const std::size_t> items, std::span<const double> scores,
                                                     bool higher_is_better);

/// Mean-of-spanned-positions ranking of `values` (larger is better):
/// position = 1 + #strictly better + (#equal - 1) / 2.
std::vector<double> fractional_positions(std::span<const double> values);

}  // namespace vnr
