#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "error_code.hpp"
#include "support.hpp"
#include "vnr/aggregate.hpp"
#include "vnr/baselines.hpp"
#include "vnr/experiments.hpp"
#include "vnr/metrics.hpp"
#include "vnr/rng.hpp"

namespace vnr {
namespace {

using test::code_of;
using Names = std::vector<std::string>;

RuleOutcome ranked(std::vector<Names> groups) {
  RuleOutcome r;
  r.ranking = std::move(groups);
  return r;
}

TEST(Baselines, MeansOfTwoTasks) {
  const Leaderboard lb({"m", "n"}, {"t1", "t2"}, {{4, 16}, {9, 9}});
  EXPECT_EQ(mean_agg(lb).scores.at("m"), 10.0);
  EXPECT_NEAR(gmean_agg(lb).scores.at("m"), 8.0, 1e-12);
  EXPECT_EQ(gmean_agg(lb).winners(), (Names{"n"}));
  EXPECT_EQ(mean_agg(lb).winners(), (Names{"m"}));
}

TEST(Baselines, EqualScoresTie) {
  const Leaderboard lb({"a", "b", "c"}, {"t1", "t2"}, {{0.5, 0.5}, {0.5, 0.5}, {0.5, 0.5}});
  EXPECT_EQ(mean_agg(lb).ranking.size(), 1u);
  EXPECT_EQ(mean_agg(lb).scores.at("a"), 0.5);
  EXPECT_EQ(optimality_gap(Leaderboard({"a", "b"}, {"t"}, {{0.96}, {1.0}})).ranking.size(), 1u);
}

TEST(Baselines, OptimalityGap) {
  EXPECT_NEAR(optimality_gap(Leaderboard({"a"}, {"t"}, {{0.90}})).scores.at("a"), 0.05, 1e-12);
  const Leaderboard lb({"a", "b"}, {"t1", "t2", "t3"}, {{1.0, 0.9, 0.8}, {0.95, 0.95, 0.95}});
  const auto r = optimality_gap(lb);
  EXPECT_NEAR(r.scores.at("a"), 0.2 / 3.0, 1e-12);
  EXPECT_NEAR(r.scores.at("a"), 0.0667, 5e-5);
  EXPECT_EQ(r.winners(), (Names{"b"}));
  EXPECT_NEAR(optimality_gap(lb, 1.0).scores.at("b"), 0.05, 1e-12);
}

TEST(Baselines, InputErrors) {
  const Leaderboard missing({"a", "b"}, {"t1", "t2"}, {{1, std::nullopt}, {1, 2}});
  EXPECT_EQ(code_of([&] { mean_agg(missing); }), ErrorCode::MissingScore);
  EXPECT_EQ(code_of([&] { gmean_agg(Leaderboard({"a"}, {"t"}, {{0.0}})); }), ErrorCode::NonPositiveScore);
  EXPECT_EQ(code_of([&] { optimality_gap(Leaderboard({"a"}, {"t"}, {{85.0}})); }), ErrorCode::ScoreOutOfRange);
  EXPECT_NO_THROW(optimality_gap(normalized(Leaderboard({"a"}, {"t"}, {{85.0}}))));
}

TEST(Baselines, MinimizeTasksCountNegated) {
  const Leaderboard lb({"a", "b"}, {"acc", "err"}, {{0.8, 0.1}, {0.8, 0.3}},
                       {Direction::Maximize, Direction::Minimize});
  EXPECT_EQ(mean_agg(lb).winners(), (Names{"a"}));
  EXPECT_NEAR(mean_agg(lb).scores.at("a"), 0.35, 1e-12);
}

TEST(BaselineProperties, GeometricMeanNeverExceedsArithmetic) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.01, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4, t = 1 + rng() % 6;
    std::vector<std::vector<ScoreCell>> s(n, std::vector<ScoreCell>(t));
    for (auto& row : s) {
      for (auto& c : row) c = u(rng);
    }
    std::vector<double> w(t);
    for (auto& x : w) x = 0.5 + static_cast<double>(rng() % 4);
    Names names, tasks;
    for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
    for (std::size_t i = 0; i < t; ++i) tasks.push_back("t" + std::to_string(i));
    const Leaderboard lb(names, tasks, s, {}, w);
    const auto am = mean_agg(lb), gm = gmean_agg(lb);
    for (const auto& m : names) EXPECT_LE(gm.scores.at(m), am.scores.at(m) * (1 + 1e-12));
  }
}

TEST(Metrics, AgreementRate) {
  const auto toy = test::toy();
  const auto dowdall = aggregate(toy, parse_rule("dowdall"));
  const auto am = aggregate(toy, parse_rule("am"));
  EXPECT_EQ(am.ranking, (std::vector<Names>{{"B"}, {"C"}, {"D"}, {"A"}}));
  EXPECT_DOUBLE_EQ(agreement_rate(dowdall, am, 3), 2.0 / 3.0);
  EXPECT_EQ(agreement_rate(am, am, 2), 1.0);
  EXPECT_EQ(agreement_rate(am, am, 4, End::Least), 1.0);

  const auto strict = ranked({{"A"}, {"B"}, {"C"}, {"D"}});
  const auto reversed = ranked({{"D"}, {"C"}, {"B"}, {"A"}});
  EXPECT_EQ(agreement_rate(strict, reversed, 2), 0.0);
  EXPECT_EQ(agreement_rate(strict, reversed, 1, End::Least), 0.0);
  EXPECT_EQ(agreement_rate(strict, reversed, 2, End::Least), 0.0);

  // {B, C} straddles the top-2 boundary and joins whole.
  const auto tied = ranked({{"A"}, {"B", "C"}, {"D"}});
  EXPECT_EQ(end_set(tied, 2), (Names{"A", "B", "C"}));
  EXPECT_DOUBLE_EQ(agreement_rate(tied, strict, 2), 2.0 / 3.0);
}

TEST(Metrics, AgreementRateErrors) {
  const auto a = ranked({{"A"}, {"B"}});
  EXPECT_EQ(code_of([&] { agreement_rate(a, ranked({{"A"}, {"C"}}), 1); }), ErrorCode::MismatchedSystems);
  EXPECT_EQ(code_of([&] { agreement_rate(a, a, 0); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { agreement_rate(a, a, 3); }), ErrorCode::InvalidArgument);
  EXPECT_EQ(code_of([&] { kendall_tau(a, ranked({{"A"}, {"B"}, {"C"}})); }), ErrorCode::MismatchedSystems);
}

TEST(Metrics, Correlations) {
  const auto strict = ranked({{"A"}, {"B"}, {"C"}, {"D"}});
  const auto swap = ranked({{"A"}, {"B"}, {"D"}, {"C"}});
  const auto reversed = ranked({{"D"}, {"C"}, {"B"}, {"A"}});
  EXPECT_EQ(kendall_tau(strict, strict), 1.0);
  EXPECT_DOUBLE_EQ(kendall_tau(strict, swap), 2.0 / 3.0);
  EXPECT_NEAR(kendall_tau(strict, swap), 0.667, 5e-4);
  EXPECT_DOUBLE_EQ(kendall_tau(strict, reversed), -1.0);
  EXPECT_DOUBLE_EQ(spearman_rho(strict, swap), 0.8);
  EXPECT_DOUBLE_EQ(spearman_rho(strict, reversed), -1.0);

  const auto flat = ranked({{"A", "B", "C", "D"}});
  EXPECT_EQ(kendall_tau(flat, flat), 1.0);
  EXPECT_EQ(kendall_tau(flat, strict), 0.0);
  EXPECT_EQ(spearman_rho(strict, flat), 0.0);

  // Tau-b with ties: 5 concordant, 0 discordant, one tie in the second order.
  const auto tied = ranked({{"A"}, {"B"}, {"C", "D"}});
  EXPECT_DOUBLE_EQ(kendall_tau(strict, tied), 5.0 / std::sqrt(6.0 * 5.0));
}

TEST(Metrics, UnrankedSystemsFormATrailingGroup) {
  RuleOutcome choice;
  choice.ranking = {{"B"}};
  choice.unranked = {"A", "C"};
  EXPECT_EQ(discriminative_power(choice), 1u);
  EXPECT_EQ(end_set(choice, 1, End::Least), (Names{"A", "C"}));
  EXPECT_EQ(kendall_tau(choice, choice), 1.0);
}

TEST(Metrics, DiscriminativePower) {
  EXPECT_EQ(discriminative_power(aggregate(test::toy(), parse_rule("dowdall"))), 1u);
  EXPECT_EQ(discriminative_power(ranked({{"A"}, {"B"}, {"C"}})), 0u);
  EXPECT_EQ(discriminative_power(ranked({{"A", "B", "C"}})), 2u);
}

TEST(Metrics, RestrictOutcomeDropsOthers) {
  const auto r = ranked({{"A"}, {"B", "C"}, {"D"}});
  const Names keep{"D", "C"};
  const auto s = restrict_outcome(r, keep);
  EXPECT_EQ(s.ranking, (std::vector<Names>{{"C"}, {"D"}}));
  EXPECT_TRUE(s.unranked.empty());
}

TEST(Rng, DeterministicAndInRange) {
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
  EXPECT_NE(derive_seed(7, 3), derive_seed(7, 4));
  Rng a(derive_seed(1, 0)), b(derive_seed(1, 0));
  for (int i = 0; i < 100; ++i) {
    const auto x = a.below(7);
    EXPECT_EQ(x, b.below(7));
    EXPECT_LT(x, 7u);
  }
  Rng c(5);
  const auto picks = c.sample(10, 4);
  EXPECT_EQ(picks.size(), 4u);
  EXPECT_EQ(std::set<std::size_t>(picks.begin(), picks.end()).size(), 4u);
  std::vector<int> v{1, 2, 3, 4, 5};
  c.shuffle(std::span<int>(v));
  EXPECT_EQ(std::multiset<int>(v.begin(), v.end()), (std::multiset<int>{1, 2, 3, 4, 5}));
}

TEST(Experiments, MeanAndPopulationSd) {
  const std::vector<double> v{1, 2, 3, 4};
  const auto [m, sd] = mean_sd(v);
  EXPECT_EQ(m, 2.5);
  EXPECT_DOUBLE_EQ(sd, std::sqrt(1.25));
}

Leaderboard random_board(std::uint64_t seed, std::size_t n, std::size_t t) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  std::vector<std::vector<ScoreCell>> s(n, std::vector<ScoreCell>(t));
  for (auto& row : s) {
    for (auto& c : row) c = std::round(u(rng) * 100) / 100;
  }
  Names names, tasks;
  for (std::size_t i = 0; i < n; ++i) names.push_back("s" + std::to_string(i));
  for (std::size_t i = 0; i < t; ++i) tasks.push_back("t" + std::to_string(i));
  return Leaderboard(names, tasks, s);
}

TEST(Iia, BaselinesNeverChangeOrder) {
  const auto lb = random_board(1, 8, 6);
  ExperimentConfig cfg;
  cfg.seed = 9;
  cfg.trials = 30;
  for (const char* id : {"am", "gm", "og"}) {
    const auto r = iia_experiment(lb, parse_rule(id), cfg);
    EXPECT_EQ(r.values, std::vector<double>(30, 0.0)) << id;
    EXPECT_EQ(r.mean, 0.0);
    EXPECT_EQ(r.sd, 0.0);
  }
}

// Without C, B leads plurality 3 to 2; C takes two of B's first places and
// A moves ahead of B.
TEST(Iia, PluralitySpoiler) {
  const Leaderboard lb({"A", "B", "C", "D"}, {"t1", "t2", "t3", "t4", "t5"},
                       {{4, 4, 3, 2, 2}, {3, 3, 4, 3, 3}, {2, 2, 2, 4, 4}, {1, 1, 1, 1, 1}});
  const Rule plurality = parse_rule("plurality");
  const std::vector<std::size_t> abd{0, 1, 3};
  const auto without = aggregate(lb.select_systems(abd), plurality);
  const auto with = aggregate(lb, plurality);
  EXPECT_GT(without.scores.at("B"), without.scores.at("A"));
  EXPECT_GT(with.scores.at("A"), with.scores.at("B"));

  ExperimentConfig cfg;
  cfg.seed = 3;
  cfg.trials = 40;
  const auto r = iia_experiment(lb, plurality, cfg);
  EXPECT_GE(*std::max_element(r.values.begin(), r.values.end()), 1.0);
  EXPECT_GT(r.mean, 0.0);
}

TEST(Iia, DeterministicAndThreadIndependent) {
  const auto lb = random_board(4, 7, 5);
  ExperimentConfig cfg;
  cfg.seed = 42;
  cfg.trials = 25;
  const auto a = iia_experiment(lb, parse_rule("borda"), cfg);
  const auto b = iia_experiment(lb, parse_rule("borda"), cfg);
  cfg.threads = 4;
  const auto c = iia_experiment(lb, parse_rule("borda"), cfg);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.values, c.values);
  EXPECT_EQ(a.mean, c.mean);
  EXPECT_EQ(a.experiment, "iia");
  EXPECT_EQ(a.rule, "borda");
  cfg.trials = 1;
  EXPECT_EQ(iia_experiment(lb, parse_rule("borda"), cfg).values.size(), 1u);
}

TEST(Iia, Preconditions) {
  ExperimentConfig cfg;
  const Leaderboard two({"a", "b"}, {"t"}, {{1}, {2}});
  EXPECT_EQ(code_of([&] { iia_experiment(two, parse_rule("borda"), cfg); }), ErrorCode::TooFewSystems);
  const Leaderboard holes({"a", "b", "c"}, {"t"}, {{1}, {std::nullopt}, {2}});
  EXPECT_EQ(code_of([&] { iia_experiment(holes, parse_rule("copeland"), cfg); }), ErrorCode::MissingScore);
}

TEST(Robustness, NoOmissionsGivePerfectCorrelation) {
  const auto lb = random_board(5, 9, 6);
  const std::vector<Rule> rules{parse_rule("copeland"), parse_rule("minimax"), parse_rule("am"), parse_rule("og")};
  ExperimentConfig cfg;
  cfg.trials = 10;
  for (const auto& r : robustness_experiment(lb, rules, cfg)) {
    EXPECT_EQ(r.values, std::vector<double>(10, 1.0)) << r.rule;
    EXPECT_EQ(r.sd, 0.0);
    EXPECT_EQ(r.experiment, "robustness");
  }
}

TEST(Robustness, DeterministicAndThreadIndependent) {
  const auto lb = random_board(6, 9, 6);
  const std::vector<Rule> rules{parse_rule("copeland"), parse_rule("am")};
  ExperimentConfig cfg;
  cfg.seed = 11;
  cfg.trials = 20;
  cfg.omit = 8;
  cfg.top_k = 5;
  const auto a = robustness_experiment(lb, rules, cfg);
  cfg.threads = 3;
  const auto b = robustness_experiment(lb, rules, cfg);
  ASSERT_EQ(a.size(), 2u);
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].values, b[i].values);
    EXPECT_EQ(a[i].omit, 8u);
    EXPECT_EQ(a[i].top_k, 5u);
    for (const double v : a[i].values) {
      EXPECT_GE(v, -1.0);
      EXPECT_LE(v, 1.0);
    }
  }
}

TEST(Robustness, Preconditions) {
  const auto lb = random_board(7, 4, 3);
  ExperimentConfig cfg;
  cfg.omit = 13;
  const std::vector<Rule> ok{parse_rule("copeland")};
  EXPECT_EQ(code_of([&] { robustness_experiment(lb, ok, cfg); }), ErrorCode::TooManyOmissions);
  cfg.omit = 1;
  const std::vector<Rule> bad{parse_rule("borda")};
  EXPECT_EQ(code_of([&] { robustness_experiment(lb, bad, cfg); }), ErrorCode::RuleUnsupportedForMode);
}

TEST(Robustness, MedianImputation) {
  const Leaderboard lb({"a", "b", "c", "d"}, {"t1", "t2", "t3"},
                       {{1, std::nullopt, std::nullopt}, {2, 5, std::nullopt}, {4, 7, std::nullopt}, {std::nullopt, 6, std::nullopt}});
  const auto filled = impute_median(lb);
  ASSERT_TRUE(filled.has_value());
  EXPECT_EQ(filled->tasks(), (Names{"t1", "t2"}));
  EXPECT_EQ(*filled->score(3, 0), 2.0);
  EXPECT_EQ(*filled->score(0, 1), 6.0);
  EXPECT_TRUE(filled->is_complete());
  const Leaderboard empty({"a"}, {"t"}, {{std::nullopt}});
  EXPECT_FALSE(impute_median(empty).has_value());
}

}  // namespace
}  // namespace vnr
