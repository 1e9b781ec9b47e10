#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "vnr/leaderboard.hpp"
#include "vnr/outcome.hpp"
#include "vnr/rule.hpp"

namespace vnr {

struct ExperimentConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 50;
  std::size_t omit = 0;     // cells deleted per robustness trial
  std::size_t top_k = 0;    // 0: every system
  unsigned threads = 1;     // results never depend on this
  AggregationMode mode = AggregationMode::Basic;
};

struct ExperimentReport {
  std::string experiment;  // "iia" or "robustness"
  std::string rule;
  std::vector<double> values;  // one per trial
  double mean = 0.0;
  double sd = 0.0;  // population standard deviation
  std::uint64_t seed = 0;
  std::size_t omit = 0;
  std::size_t top_k = 0;
};

/// Per trial: shuffle the systems, start from the first two and add the rest
/// one at a time. The trial value counts additions after which some pair of
/// previously present systems changed relative order (better, tied, worse).
ExperimentReport iia_experiment(const Leaderboard& lb, const Rule& rule, const ExperimentConfig& cfg);

/// Per trial: delete `cfg.omit` present cells, chosen once for all rules, and
/// record Spearman rho between each rule's perturbed and intact rankings over
/// the intact top-k set. Majority rules read missing cells natively; the
/// baselines fill each deleted cell with its task's median over the remaining
/// systems and drop tasks with no remaining scores.
std::vector<ExperimentReport> robustness_experiment(const Leaderboard& lb, std::span<const Rule> rules,
                                                    const ExperimentConfig& cfg);

/// Mean and population standard deviation.
std::pair<double, double> mean_sd(std::span<const double> values);

/// Leaderboard with every deleted cell imputed by its task median; tasks
/// with no present score are dropped. Returns nullopt if no task remains.
std::optional<Leaderboard> impute_median(const Leaderboard& lb);

}  // namespace vnr
