#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vnr/leaderboard.hpp"

namespace vnr {

/// Per-voter (task) fractional positions of every system, plus voter weights.
///
/// Position 1 is best. Tied systems share the mean of the integer places they
/// span, so positions of a complete voter always sum to n(n+1)/2. A system
/// without a score on a voter has no position there, and the remaining
/// systems are ranked among themselves.
class RankProfile {
 public:
  using Position = std::optional<double>;

  /// `positions[v][s]`. Positions must already be fractional ranks of the
  /// systems present on voter `v`.
  RankProfile(std::vector<std::string> systems, std::vector<std::string> voters,
              std::vector<std::vector<Position>> positions, std::vector<double> weights);

  /// Profile from explicit orders: `orders[v]` lists tie-groups of system
  /// indices, best first. Systems absent from `orders[v]` carry no position.
  static RankProfile from_orders(std::vector<std::string> systems, std::vector<std::string> voters,
                                 const std::vector<std::vector<std::vector<std::size_t>>>& orders,
                                 std::vector<double> weights);

  std::size_t num_systems() const noexcept { return systems_.size(); }
  std::size_t num_voters() const noexcept { return voters_.size(); }
  const std::vector<std::string>& systems() const noexcept { return systems_; }
  const std::vector<std::string>& voters() const noexcept { return voters_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  double weight(std::size_t voter) const { return weights_.at(voter); }
  double total_weight() const noexcept;

  const Position& position(std::size_t voter, std::size_t system) const { return positions_.at(voter).at(system); }
  /// Number of systems present on `voter` (including `system`) sharing its position.
  std::size_t tie_size(std::size_t voter, std::size_t system) const;
  /// Number of systems with a position on `voter`.
  std::size_t present_count(std::size_t voter) const;

  bool is_complete() const noexcept;
  /// Throws MissingScore naming the first absent cell.
  void require_complete() const;

  std::size_t system_index(std::string_view name) const;

  /// Profile over `subset` only (indices into this profile), with positions
  /// re-ranked among the subset. System order follows `subset`.
  RankProfile restrict_to(std::span<const std::size_t> subset) const;

  /// Copy with voters permuted: voter `i` of the result is voter `order[i]`.
  RankProfile permute_voters(std::span<const std::size_t> order) const;

  bool operator==(const RankProfile&) const = default;

 private:
  std::vector<std::string> systems_;
  std::vector<std::string> voters_;
  std::vector<std::vector<Position>> positions_;
  std::vector<double> weights_;
};

struct ProfileOptions {
  /// Task indices to include; empty means all tasks.
  std::vector<std::size_t> task_subset;
  /// Allow absent cells (only majority-relation rules accept these).
  bool missing_tolerant = false;
  /// Per-task weight override, indexed like the leaderboard's tasks.
  std::optional<std::vector<double>> weights;
};

/// Ranks systems within each task by effective score (minimize tasks negated).
RankProfile build_profile(const Leaderboard& lb, const ProfileOptions& options = {});

/// Weighted number of voters placing `system` at each place 1..n. A tie
/// spanning g places spreads the voter's weight evenly over those places.
std::vector<double> position_counts(const RankProfile& profile, std::size_t system);
std::vector<double> position_counts(const RankProfile& profile, std::string_view system);

}  // namespace vnr
