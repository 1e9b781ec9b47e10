#include "vnr/baselines.hpp"

#include <cmath>
#include <numeric>

#include "vnr/errors.hpp"
#include "vnr/numeric.hpp"
#include "vnr/rule.hpp"

namespace vnr {
namespace {

std::vector<double> resolve_weights(const Leaderboard& lb, std::optional<std::span<const double>> weights) {
  if (!weights) return lb.weights();
  if (weights->size() != lb.num_tasks()) throw Error(ErrorCode::InvalidArgument, "weight vector length differs from task count");
  return {weights->begin(), weights->end()};
}

double require_score(const Leaderboard& lb, std::size_t s, std::size_t t) {
  auto v = lb.effective_score(s, t);
  if (!v) throw Error(ErrorCode::MissingScore, "system '" + lb.systems()[s] + "' has no score on '" + lb.tasks()[t] + "'");
  return *v;
}

RuleOutcome rank_by(const Leaderboard& lb, std::string id, const std::vector<double>& values, bool higher_better) {
  std::vector<std::size_t> all(lb.num_systems());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return make_outcome(std::move(id), lb.systems(), group_by_score(all, values, higher_better), values);
}

}  // namespace

RuleOutcome mean_agg(const Leaderboard& lb, std::optional<std::span<const double>> weights) {
  const auto w = resolve_weights(lb, weights);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  std::vector<double> mean(lb.num_systems(), 0.0);
  for (std::size_t s = 0; s < lb.num_systems(); ++s) {
    for (std::size_t t = 0; t < lb.num_tasks(); ++t) mean[s] += w[t] * require_score(lb, s, t);
    mean[s] /= total;
  }
  return rank_by(lb, "am", mean, true);
}

RuleOutcome gmean_agg(const Leaderboard& lb, std::optional<std::span<const double>> weights) {
  const auto w = resolve_weights(lb, weights);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  std::vector<double> gmean(lb.num_systems(), 0.0);
  for (std::size_t s = 0; s < lb.num_systems(); ++s) {
    double log_sum = 0.0;
    for (std::size_t t = 0; t < lb.num_tasks(); ++t) {
      const double v = require_score(lb, s, t);
      if (v <= 0.0) {
        throw Error(ErrorCode::NonPositiveScore, "system '" + lb.systems()[s] + "' on '" + lb.tasks()[t] + "'");
      }
      log_sum += w[t] * std::log(v);
    }
    gmean[s] = std::exp(log_sum / total);
  }
  return rank_by(lb, "gm", gmean, true);
}

RuleOutcome optimality_gap(const Leaderboard& lb, double gamma, std::optional<std::span<const double>> weights) {
  if (!(gamma > 0.0 && gamma <= 1.0)) throw Error(ErrorCode::InvalidArgument, "gamma must lie in (0, 1]");
  const auto w = resolve_weights(lb, weights);
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  std::vector<double> gap(lb.num_systems(), 0.0);
  for (std::size_t s = 0; s < lb.num_systems(); ++s) {
    for (std::size_t t = 0; t < lb.num_tasks(); ++t) {
      const double v = require_score(lb, s, t);
      if (v < 0.0 || v > 1.0) {
        throw Error(ErrorCode::ScoreOutOfRange, "score of '" + lb.systems()[s] + "' on '" + lb.tasks()[t] +
                                                    "' is outside [0, 1]; normalize the input");
      }
      gap[s] += w[t] * std::max(0.0, gamma - v);
    }
    gap[s] /= total;
  }
  auto out = rank_by(lb, "og", gap, false);
  if (gamma != kDefaultGamma) out.rule_id = rule_id(Rule{RuleKind::OptimalityGap, {}, gamma});
  return out;
}

Leaderboard normalized(const Leaderboard& lb, double divisor) {
  if (!(divisor > 0.0)) throw Error(ErrorCode::InvalidArgument, "normalization divisor must be positive");
  auto rows = lb.scores();
  for (auto& row : rows) {
    for (auto& cell : row) {
      if (cell) *cell /= divisor;
    }
  }
  return lb.with_scores(std::move(rows));
}

}  // namespace vnr
