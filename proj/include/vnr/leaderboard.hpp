#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vnr {

enum class Direction { Maximize, Minimize };

using ScoreCell = std::optional<double>;

/// Systems x tasks score matrix. Immutable once constructed; the `with_*`
/// helpers return modified copies.
///
/// Scores are stored as given. Minimize-direction tasks are negated only when
/// read through `effective_score`, so reports can echo the raw values.
class Leaderboard {
 public:
  /// `scores[s][t]` is the score of system `s` on task `t`. Empty optional
  /// vectors for directions/weights/groups select the defaults (maximize,
  /// weight 1, ungrouped).
  Leaderboard(std::vector<std::string> systems, std::vector<std::string> tasks,
              std::vector<std::vector<ScoreCell>> scores, std::vector<Direction> directions = {},
              std::vector<double> weights = {},
              std::vector<std::optional<std::string>> groups = {});

  std::size_t num_systems() const noexcept { return systems_.size(); }
  std::size_t num_tasks() const noexcept { return tasks_.size(); }

  const std::vector<std::string>& systems() const noexcept { return systems_; }
  const std::vector<std::string>& tasks() const noexcept { return tasks_; }
  const std::vector<Direction>& directions() const noexcept { return directions_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::vector<std::optional<std::string>>& groups() const noexcept { return groups_; }
  const std::vector<std::vector<ScoreCell>>& scores() const noexcept { return scores_; }

  std::size_t system_index(std::string_view name) const;
  std::size_t task_index(std::string_view name) const;

  const ScoreCell& score(std::size_t system, std::size_t task) const { return scores_.at(system).at(task); }
  /// Score with minimize-direction tasks negated, so larger is always better.
  ScoreCell effective_score(std::size_t system, std::size_t task) const;

  bool is_complete() const noexcept;
  std::size_t present_cells() const noexcept;
  bool has_groups() const noexcept;
  /// Group names in order of first appearance.
  std::vector<std::string> group_names() const;
  /// Task indices of each group returned by `group_names()`, followed by one
  /// singleton entry per ungrouped task.
  std::vector<std::vector<std::size_t>> task_partition() const;

  Leaderboard with_scores(std::vector<std::vector<ScoreCell>> scores) const;
  Leaderboard with_weights(std::vector<double> weights) const;
  Leaderboard with_groups(std::vector<std::optional<std::string>> groups) const;
  Leaderboard with_directions(std::vector<Direction> directions) const;
  Leaderboard select_systems(std::span<const std::size_t> systems) const;
  Leaderboard select_tasks(std::span<const std::size_t> tasks) const;

  bool operator==(const Leaderboard&) const = default;

 private:
  std::vector<std::string> systems_;
  std::vector<std::string> tasks_;
  std::vector<std::vector<ScoreCell>> scores_;
  std::vector<Direction> directions_;
  std::vector<double> weights_;
  std::vector<std::optional<std::string>> groups_;
};

}  // namespace vnr
