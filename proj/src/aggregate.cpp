#include "vnr/aggregate.hpp"

#include <numeric>

#include "vnr/baselines.hpp"
#include "vnr/errors.hpp"
#include "vnr/iterative_rules.hpp"
#include "vnr/majority.hpp"
#include "vnr/scoring_rules.hpp"

namespace vnr {
namespace {

RuleOutcome run_on_leaderboard(const Leaderboard& lb, const Rule& rule, const std::vector<double>& weights) {
  if (family(rule.kind) == RuleFamily::Baseline) {
    switch (rule.kind) {
      case RuleKind::ArithmeticMean: return mean_agg(lb, weights);
      case RuleKind::GeometricMean: return gmean_agg(lb, weights);
      default: return optimality_gap(lb, rule.gamma, weights);
    }
  }
  ProfileOptions opts;
  opts.missing_tolerant = accepts_missing(rule.kind);
  opts.weights = weights;
  return apply_rule(build_profile(lb, opts), rule);
}

std::string describe_order(const RuleOutcome& out) {
  std::string s;
  for (std::size_t g = 0; g < out.ranking.size(); ++g) {
    if (g) s += " > ";
    for (std::size_t i = 0; i < out.ranking[g].size(); ++i) {
      if (i) s += " ~ ";
      s += out.ranking[g][i];
    }
  }
  return s;
}

}  // namespace

std::vector<double> effective_weights(const Leaderboard& lb, AggregationMode mode) {
  if (mode != AggregationMode::Weighted) return lb.weights();
  std::vector<double> w = lb.weights();
  for (const auto& part : lb.task_partition()) {
    for (std::size_t t : part) w[t] /= static_cast<double>(part.size());
  }
  return w;
}

RuleOutcome apply_rule(const RankProfile& profile, const Rule& rule) {
  RuleOutcome out;
  switch (family(rule.kind)) {
    case RuleFamily::Scoring: out = apply_scoring_rule(profile, rule); break;
    case RuleFamily::Iterative: out = apply_iterative_rule(profile, rule).outcome; break;
    case RuleFamily::Majority: out = apply_majority_rule(profile, rule); break;
    case RuleFamily::Baseline:
      throw Error(ErrorCode::RuleUnsupportedForMode, rule_id(rule) + " needs raw scores, not a rank profile");
  }
  out.rule_id = rule_id(rule);
  return out;
}

RuleOutcome aggregate(const Leaderboard& lb, const Rule& rule, AggregationMode mode) {
  if (mode != AggregationMode::Basic && !lb.has_groups()) {
    throw Error(ErrorCode::MissingGroups, std::string(to_string(mode)) + " aggregation needs task groups");
  }

  if (mode != AggregationMode::TwoStep) {
    RuleOutcome out = run_on_leaderboard(lb, rule, effective_weights(lb, mode));
    out.rule_id = rule_id(rule);
    out.mode = mode;
    return out;
  }

  if (family(rule.kind) == RuleFamily::Baseline || is_choice_rule(rule.kind)) {
    throw Error(ErrorCode::RuleUnsupportedForMode, rule_id(rule) + " does not produce a total interim ranking");
  }

  std::vector<std::string> electors;
  std::vector<double> elector_weights;
  std::vector<std::vector<std::vector<std::size_t>>> orders;
  std::vector<std::string> trace;
  const auto names = lb.group_names();
  const auto parts = lb.task_partition();
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& part = parts[p];
    double mass = 0.0;
    for (std::size_t t : part) mass += lb.weights()[t];
    if (mass <= 0.0) continue;

    const Leaderboard sub = lb.select_tasks(part);
    const RuleOutcome interim = run_on_leaderboard(sub, rule, sub.weights());
    std::vector<std::vector<std::size_t>> order;
    for (const auto& group : interim.ranking) {
      std::vector<std::size_t> idx;
      for (const auto& s : group) idx.push_back(lb.system_index(s));
      order.push_back(std::move(idx));
    }
    electors.push_back(p < names.size() ? names[p] : lb.tasks()[part.front()]);
    elector_weights.push_back(mass / static_cast<double>(part.size()));
    orders.push_back(std::move(order));
    trace.push_back("elector " + electors.back() + ": " + describe_order(interim));
  }

  const auto profile = RankProfile::from_orders(lb.systems(), electors, orders, elector_weights);
  RuleOutcome out = apply_rule(profile, rule);
  out.mode = AggregationMode::TwoStep;
  trace.insert(trace.end(), out.diagnostics.begin(), out.diagnostics.end());
  out.diagnostics = std::move(trace);
  return out;
}

}  // namespace vnr
