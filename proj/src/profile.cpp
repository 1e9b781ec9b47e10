#include "vnr/profile.hpp"

#include <algorithm>
#include <numeric>

#include "vnr/errors.hpp"
#include "vnr/numeric.hpp"

namespace vnr {

RankProfile::RankProfile(std::vector<std::string> systems, std::vector<std::string> voters,
                         std::vector<std::vector<Position>> positions, std::vector<double> weights)
    : systems_(std::move(systems)),
      voters_(std::move(voters)),
      positions_(std::move(positions)),
      weights_(std::move(weights)) {
  if (systems_.empty()) throw Error(ErrorCode::InvalidLeaderboard, "profile has no systems");
  if (voters_.empty()) throw Error(ErrorCode::EmptySubset, "profile has no voters");
  if (positions_.size() != voters_.size() || weights_.size() != voters_.size()) {
    throw Error(ErrorCode::InvalidLeaderboard, "profile voter dimensions disagree");
  }
  for (const auto& row : positions_) {
    if (row.size() != systems_.size()) throw Error(ErrorCode::InvalidLeaderboard, "profile row has wrong length");
  }
}

RankProfile RankProfile::from_orders(std::vector<std::string> systems, std::vector<std::string> voters,
                                     const std::vector<std::vector<std::vector<std::size_t>>>& orders,
                                     std::vector<double> weights) {
  std::vector<std::vector<Position>> positions(orders.size(), std::vector<Position>(systems.size()));
  for (std::size_t v = 0; v < orders.size(); ++v) {
    double place = 1.0;
    for (const auto& group : orders[v]) {
      const double mean = place + static_cast<double>(group.size() - 1) / 2.0;
      for (std::size_t s : group) {
        if (s >= systems.size()) throw Error(ErrorCode::InvalidLeaderboard, "order references unknown system");
        if (positions[v][s]) throw Error(ErrorCode::InvalidLeaderboard, "system listed twice in one order");
        positions[v][s] = mean;
      }
      place += static_cast<double>(group.size());
    }
  }
  return RankProfile(std::move(systems), std::move(voters), std::move(positions), std::move(weights));
}

double RankProfile::total_weight() const noexcept { return std::accumulate(weights_.begin(), weights_.end(), 0.0); }

std::size_t RankProfile::tie_size(std::size_t voter, std::size_t system) const {
  const Position& p = position(voter, system);
  if (!p) return 0;
  const auto& row = positions_[voter];
  return static_cast<std::size_t>(std::count(row.begin(), row.end(), p));
}

std::size_t RankProfile::present_count(std::size_t voter) const {
  const auto& row = positions_.at(voter);
  return static_cast<std::size_t>(std::count_if(row.begin(), row.end(), [](const Position& p) { return p.has_value(); }));
}

bool RankProfile::is_complete() const noexcept {
  return std::all_of(positions_.begin(), positions_.end(), [](const auto& row) {
    return std::all_of(row.begin(), row.end(), [](const Position& p) { return p.has_value(); });
  });
}

void RankProfile::require_complete() const {
  for (std::size_t v = 0; v < voters_.size(); ++v) {
    for (std::size_t s = 0; s < systems_.size(); ++s) {
      if (!positions_[v][s]) {
        throw Error(ErrorCode::MissingScore, "system '" + systems_[s] + "' has no score on '" + voters_[v] + "'");
      }
    }
  }
}

std::size_t RankProfile::system_index(std::string_view name) const {
  auto it = std::find(systems_.begin(), systems_.end(), name);
  if (it == systems_.end()) throw Error(ErrorCode::UnknownSystem, "'" + std::string(name) + "'");
  return static_cast<std::size_t>(it - systems_.begin());
}

RankProfile RankProfile::restrict_to(std::span<const std::size_t> subset) const {
  if (subset.empty()) throw Error(ErrorCode::EmptySubset, "system subset is empty");
  std::vector<std::string> names;
  for (std::size_t s : subset) names.push_back(systems_.at(s));

  std::vector<std::vector<Position>> positions(voters_.size(), std::vector<Position>(subset.size()));
  for (std::size_t v = 0; v < voters_.size(); ++v) {
    std::vector<std::size_t> present;
    std::vector<double> values;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (const Position& p = positions_[v][subset[i]]) {
        present.push_back(i);
        values.push_back(-*p);
      }
    }
    const auto ranks = fractional_positions(values);
    for (std::size_t k = 0; k < present.size(); ++k) positions[v][present[k]] = ranks[k];
  }
  return RankProfile(std::move(names), voters_, std::move(positions), weights_);
}

RankProfile RankProfile::permute_voters(std::span<const std::size_t> order) const {
  std::vector<std::string> voters;
  std::vector<std::vector<Position>> positions;
  std::vector<double> weights;
  for (std::size_t v : order) {
    voters.push_back(voters_.at(v));
    positions.push_back(positions_.at(v));
    weights.push_back(weights_.at(v));
  }
  return RankProfile(systems_, std::move(voters), std::move(positions), std::move(weights));
}

RankProfile build_profile(const Leaderboard& lb, const ProfileOptions& options) {
  std::vector<std::size_t> tasks = options.task_subset;
  if (tasks.empty()) {
    tasks.resize(lb.num_tasks());
    std::iota(tasks.begin(), tasks.end(), std::size_t{0});
  }
  if (options.weights && options.weights->size() != lb.num_tasks()) {
    throw Error(ErrorCode::InvalidArgument, "weight override length differs from task count");
  }

  std::vector<std::string> voters;
  std::vector<double> weights;
  std::vector<std::vector<RankProfile::Position>> positions;
  for (std::size_t t : tasks) {
    if (t >= lb.num_tasks()) throw Error(ErrorCode::InvalidArgument, "task index out of range");
    voters.push_back(lb.tasks()[t]);
    weights.push_back(options.weights ? (*options.weights)[t] : lb.weights()[t]);

    std::vector<std::size_t> present;
    std::vector<double> values;
    for (std::size_t s = 0; s < lb.num_systems(); ++s) {
      if (auto v = lb.effective_score(s, t)) {
        present.push_back(s);
        values.push_back(*v);
      } else if (!options.missing_tolerant) {
        throw Error(ErrorCode::MissingScore,
                    "system '" + lb.systems()[s] + "' has no score on '" + lb.tasks()[t] + "'");
      }
    }
    std::vector<RankProfile::Position> row(lb.num_systems());
    const auto ranks = fractional_positions(values);
    for (std::size_t k = 0; k < present.size(); ++k) row[present[k]] = ranks[k];
    positions.push_back(std::move(row));
  }
  return RankProfile(lb.systems(), std::move(voters), std::move(positions), std::move(weights));
}

std::vector<double> position_counts(const RankProfile& profile, std::size_t system) {
  if (system >= profile.num_systems()) throw Error(ErrorCode::UnknownSystem, "index out of range");
  std::vector<double> counts(profile.num_systems(), 0.0);
  for (std::size_t v = 0; v < profile.num_voters(); ++v) {
    const auto& p = profile.position(v, system);
    if (!p) continue;
    const std::size_t span = profile.tie_size(v, system);
    // First spanned place, 1-based: mean position minus half the extra span.
    const double first = *p - static_cast<double>(span - 1) / 2.0;
    const auto start = static_cast<std::size_t>(first + 0.5) - 1;
    const double share = profile.weight(v) / static_cast<double>(span);
    for (std::size_t k = 0; k < span; ++k) counts[start + k] += share;
  }
  return counts;
}

std::vector<double> position_counts(const RankProfile& profile, std::string_view system) {
  return position_counts(profile, profile.system_index(system));
}

}  // namespace vnr
