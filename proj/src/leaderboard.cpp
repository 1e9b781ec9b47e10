#include "vnr/leaderboard.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "vnr/errors.hpp"

namespace vnr {
namespace {

void require_unique(const std::vector<std::string>& ids, std::string_view what) {
  std::set<std::string_view> seen;
  for (const auto& id : ids) {
    if (id.empty()) throw Error(ErrorCode::InvalidLeaderboard, std::string(what) + " identifier is empty");
    if (!seen.insert(id).second) {
      throw Error(ErrorCode::InvalidLeaderboard, "duplicate " + std::string(what) + " '" + id + "'");
    }
  }
}

}  // namespace

Leaderboard::Leaderboard(std::vector<std::string> systems, std::vector<std::string> tasks,
                         std::vector<std::vector<ScoreCell>> scores, std::vector<Direction> directions,
                         std::vector<double> weights, std::vector<std::optional<std::string>> groups)
    : systems_(std::move(systems)),
      tasks_(std::move(tasks)),
      scores_(std::move(scores)),
      directions_(std::move(directions)),
      weights_(std::move(weights)),
      groups_(std::move(groups)) {
  if (systems_.empty()) throw Error(ErrorCode::InvalidLeaderboard, "no systems");
  if (tasks_.empty()) throw Error(ErrorCode::InvalidLeaderboard, "no tasks");
  require_unique(systems_, "system");
  require_unique(tasks_, "task");

  const std::size_t n_tasks = tasks_.size();
  if (directions_.empty()) directions_.assign(n_tasks, Direction::Maximize);
  if (weights_.empty()) weights_.assign(n_tasks, 1.0);
  if (groups_.empty()) groups_.assign(n_tasks, std::nullopt);
  if (directions_.size() != n_tasks || weights_.size() != n_tasks || groups_.size() != n_tasks) {
    throw Error(ErrorCode::InvalidLeaderboard, "per-task attribute length differs from task count");
  }
  if (scores_.size() != systems_.size()) {
    throw Error(ErrorCode::InvalidLeaderboard, "score matrix has wrong number of rows");
  }
  for (std::size_t s = 0; s < scores_.size(); ++s) {
    if (scores_[s].size() != n_tasks) {
      throw Error(ErrorCode::InvalidLeaderboard, "score row of '" + systems_[s] + "' has wrong length");
    }
    for (const auto& cell : scores_[s]) {
      if (cell && !std::isfinite(*cell)) {
        throw Error(ErrorCode::InvalidLeaderboard, "non-finite score for '" + systems_[s] + "'");
      }
    }
  }
  bool any_positive = false;
  for (double w : weights_) {
    if (!std::isfinite(w) || w < 0.0) throw Error(ErrorCode::InvalidLeaderboard, "task weights must be finite and >= 0");
    any_positive = any_positive || w > 0.0;
  }
  if (!any_positive) throw Error(ErrorCode::InvalidLeaderboard, "at least one task weight must be positive");
  for (const auto& g : groups_) {
    if (g && g->empty()) throw Error(ErrorCode::InvalidLeaderboard, "group name is empty");
  }
}

std::size_t Leaderboard::system_index(std::string_view name) const {
  auto it = std::find(systems_.begin(), systems_.end(), name);
  if (it == systems_.end()) throw Error(ErrorCode::UnknownSystem, "'" + std::string(name) + "'");
  return static_cast<std::size_t>(it - systems_.begin());
}

std::size_t Leaderboard::task_index(std::string_view name) const {
  auto it = std::find(tasks_.begin(), tasks_.end(), name);
  if (it == tasks_.end()) throw Error(ErrorCode::InvalidArgument, "unknown task '" + std::string(name) + "'");
  return static_cast<std::size_t>(it - tasks_.begin());
}

ScoreCell Leaderboard::effective_score(std::size_t system, std::size_t task) const {
  const ScoreCell& cell = score(system, task);
  if (!cell) return std::nullopt;
  return directions_[task] == Direction::Minimize ? -*cell : *cell;
}

bool Leaderboard::is_complete() const noexcept { return present_cells() == systems_.size() * tasks_.size(); }

std::size_t Leaderboard::present_cells() const noexcept {
  std::size_t n = 0;
  for (const auto& row : scores_) n += static_cast<std::size_t>(std::count_if(row.begin(), row.end(), [](const ScoreCell& c) { return c.has_value(); }));
  return n;
}

bool Leaderboard::has_groups() const noexcept {
  return std::any_of(groups_.begin(), groups_.end(), [](const auto& g) { return g.has_value(); });
}

std::vector<std::string> Leaderboard::group_names() const {
  std::vector<std::string> names;
  for (const auto& g : groups_) {
    if (g && std::find(names.begin(), names.end(), *g) == names.end()) names.push_back(*g);
  }
  return names;
}

std::vector<std::vector<std::size_t>> Leaderboard::task_partition() const {
  const auto names = group_names();
  std::vector<std::vector<std::size_t>> parts(names.size());
  std::vector<std::vector<std::size_t>> singletons;
  for (std::size_t t = 0; t < tasks_.size(); ++t) {
    if (groups_[t]) {
      auto idx = static_cast<std::size_t>(std::find(names.begin(), names.end(), *groups_[t]) - names.begin());
      parts[idx].push_back(t);
    } else {
      singletons.push_back({t});
    }
  }
  parts.insert(parts.end(), singletons.begin(), singletons.end());
  return parts;
}

Leaderboard Leaderboard::with_scores(std::vector<std::vector<ScoreCell>> scores) const {
  return Leaderboard(systems_, tasks_, std::move(scores), directions_, weights_, groups_);
}

Leaderboard Leaderboard::with_weights(std::vector<double> weights) const {
  return Leaderboard(systems_, tasks_, scores_, directions_, std::move(weights), groups_);
}

Leaderboard Leaderboard::with_groups(std::vector<std::optional<std::string>> groups) const {
  return Leaderboard(systems_, tasks_, scores_, directions_, weights_, std::move(groups));
}

Leaderboard Leaderboard::with_directions(std::vector<Direction> directions) const {
  return Leaderboard(systems_, tasks_, scores_, std::move(directions), weights_, groups_);
}

Leaderboard Leaderboard::select_systems(std::span<const std::size_t> systems) const {
  std::vector<std::string> names;
  std::vector<std::vector<ScoreCell>> rows;
  for (std::size_t s : systems) {
    names.push_back(systems_.at(s));
    rows.push_back(scores_.at(s));
  }
  return Leaderboard(std::move(names), tasks_, std::move(rows), directions_, weights_, groups_);
}

Leaderboard Leaderboard::select_tasks(std::span<const std::size_t> tasks) const {
  if (tasks.empty()) throw Error(ErrorCode::EmptySubset, "task subset is empty");
  std::vector<std::string> names;
  std::vector<Direction> dirs;
  std::vector<double> weights;
  std::vector<std::optional<std::string>> groups;
  for (std::size_t t : tasks) {
    names.push_back(tasks_.at(t));
    dirs.push_back(directions_[t]);
    weights.push_back(weights_[t]);
    groups.push_back(groups_[t]);
  }
  std::vector<std::vector<ScoreCell>> rows(systems_.size());
  for (std::size_t s = 0; s < systems_.size(); ++s) {
    for (std::size_t t : tasks) rows[s].push_back(scores_[s][t]);
  }
  return Leaderboard(systems_, std::move(names), std::move(rows), std::move(dirs), std::move(weights), std::move(groups));
}

}  // namespace vnr
