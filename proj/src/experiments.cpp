#include "vnr/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <mutex>
#include <numeric>
#include <thread>

#include "vnr/aggregate.hpp"
#include "vnr/errors.hpp"
#include "vnr/metrics.hpp"
#include "vnr/rng.hpp"

namespace vnr {
namespace {

// Runs body(trial) for every trial. Each trial writes only its own slot, so
// the outcome is independent of scheduling.
void for_each_trial(std::size_t trials, unsigned threads, const std::function<void(std::size_t)>& body) {
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(trials)));
  if (workers == 1) {
    for (std::size_t t = 0; t < trials; ++t) body(t);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t t; (t = next.fetch_add(1)) < trials;) {
        try {
          body(t);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

// -1, 0, +1 for each ordered pair of `names` under `r`.
std::vector<int> relations(const RuleOutcome& r, const std::vector<std::string>& names) {
  const auto rank = competition_ranks(r);
  std::vector<int> out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    for (std::size_t j = i + 1; j < names.size(); ++j) {
      const auto a = rank.at(names[i]);
      const auto b = rank.at(names[j]);
      out.push_back((a < b) - (a > b));
    }
  }
  return out;
}

ExperimentReport finish(std::string experiment, const Rule& rule, std::vector<double> values, const ExperimentConfig& cfg) {
  ExperimentReport r;
  r.experiment = std::move(experiment);
  r.rule = rule_id(rule);
  std::tie(r.mean, r.sd) = mean_sd(values);
  r.values = std::move(values);
  r.seed = cfg.seed;
  r.omit = cfg.omit;
  r.top_k = cfg.top_k;
  return r;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

bool robust_capable(const Rule& rule) {
  const auto f = family(rule.kind);
  return f == RuleFamily::Majority || f == RuleFamily::Baseline;
}

}  // namespace

std::pair<double, double> mean_sd(std::span<const double> values) {
  if (values.empty()) return {0.0, 0.0};
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / n)};
}

std::optional<Leaderboard> impute_median(const Leaderboard& lb) {
  auto rows = lb.scores();
  std::vector<std::size_t> kept;
  for (std::size_t t = 0; t < lb.num_tasks(); ++t) {
    std::vector<double> present;
    for (std::size_t s = 0; s < lb.num_systems(); ++s) {
      if (rows[s][t]) present.push_back(*rows[s][t]);
    }
    if (present.empty()) continue;
    kept.push_back(t);
    if (present.size() == lb.num_systems()) continue;
    const double m = median(std::move(present));
    for (std::size_t s = 0; s < lb.num_systems(); ++s) {
      if (!rows[s][t]) rows[s][t] = m;
    }
  }
  if (kept.empty()) return std::nullopt;
  const Leaderboard filled = lb.with_scores(std::move(rows));
  if (kept.size() == lb.num_tasks()) return filled;
  return filled.select_tasks(kept);
}

ExperimentReport iia_experiment(const Leaderboard& lb, const Rule& rule, const ExperimentConfig& cfg) {
  if (lb.num_systems() < 3) throw Error(ErrorCode::TooFewSystems, "the IIA experiment needs at least 3 systems");
  if (!lb.is_complete()) throw Error(ErrorCode::MissingScore, "the IIA experiment needs a complete leaderboard");
  if (cfg.trials == 0) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");

  std::vector<double> values(cfg.trials, 0.0);
  for_each_trial(cfg.trials, cfg.threads, [&](std::size_t trial) {
    Rng rng(derive_seed(cfg.seed, trial));
    std::vector<std::size_t> order(lb.num_systems());
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(std::span<std::size_t>(order));

    auto run = [&](std::size_t count) {
      return aggregate(lb.select_systems(std::span<const std::size_t>(order).first(count)), rule, cfg.mode);
    };
    std::vector<std::string> present;
    for (std::size_t i = 0; i < 2; ++i) present.push_back(lb.systems()[order[i]]);
    std::vector<int> before = relations(run(2), present);
    std::size_t changes = 0;
    for (std::size_t count = 3; count <= order.size(); ++count) {
      const RuleOutcome now = run(count);
      if (relations(now, present) != before) ++changes;
      present.push_back(lb.systems()[order[count - 1]]);
      before = relations(now, present);
    }
    values[trial] = static_cast<double>(changes);
  });
  return finish("iia", rule, std::move(values), cfg);
}

std::vector<ExperimentReport> robustness_experiment(const Leaderboard& lb, std::span<const Rule> rules,
                                                    const ExperimentConfig& cfg) {
  if (cfg.trials == 0) throw Error(ErrorCode::InvalidArgument, "trials must be >= 1");
  if (cfg.omit > lb.present_cells()) {
    throw Error(ErrorCode::TooManyOmissions, "cannot delete " + std::to_string(cfg.omit) + " of " +
                                                 std::to_string(lb.present_cells()) + " present scores");
  }
  if (cfg.top_k > lb.num_systems()) throw Error(ErrorCode::InvalidArgument, "top-k exceeds the number of systems");
  for (const auto& rule : rules) {
    if (!robust_capable(rule)) {
      throw Error(ErrorCode::RuleUnsupportedForMode, rule_id(rule) + " cannot rank a leaderboard with deleted scores");
    }
  }
  const std::size_t k = cfg.top_k == 0 ? lb.num_systems() : cfg.top_k;

  std::vector<RuleOutcome> reference;
  std::vector<std::vector<std::string>> keep;
  for (const auto& rule : rules) {
    reference.push_back(aggregate(lb, rule, cfg.mode));
    keep.push_back(end_set(reference.back(), k));
  }

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t s = 0; s < lb.num_systems(); ++s) {
    for (std::size_t t = 0; t < lb.num_tasks(); ++t) {
      if (lb.score(s, t)) cells.emplace_back(s, t);
    }
  }

  std::vector<std::vector<double>> values(rules.size(), std::vector<double>(cfg.trials, 0.0));
  for_each_trial(cfg.trials, cfg.threads, [&](std::size_t trial) {
    Rng rng(derive_seed(cfg.seed, trial));
    auto rows = lb.scores();
    for (std::size_t c : rng.sample(cells.size(), cfg.omit)) rows[cells[c].first][cells[c].second].reset();
    const Leaderboard damaged = lb.with_scores(std::move(rows));
    std::optional<std::optional<Leaderboard>> imputed;

    for (std::size_t r = 0; r < rules.size(); ++r) {
      RuleOutcome perturbed;
      if (family(rules[r].kind) == RuleFamily::Baseline) {
        if (!imputed) imputed = impute_median(damaged);
        if (*imputed) {
          perturbed = aggregate(**imputed, rules[r], cfg.mode);
        } else {
          perturbed.ranking = {lb.systems()};
        }
      } else {
        perturbed = aggregate(damaged, rules[r], cfg.mode);
      }
      values[r][trial] = spearman_rho(restrict_outcome(reference[r], keep[r]), restrict_outcome(perturbed, keep[r]));
    }
  });

  std::vector<ExperimentReport> out;
  for (std::size_t r = 0; r < rules.size(); ++r) out.push_back(finish("robustness", rules[r], std::move(values[r]), cfg));
  for (auto& rep : out) rep.top_k = k;
  return out;
}

}  // namespace vnr
