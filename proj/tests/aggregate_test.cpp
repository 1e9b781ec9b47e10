#include <gtest/gtest.h>

#include "error_code.hpp"
#include "support.hpp"
#include "vnr/aggregate.hpp"

namespace vnr {
namespace {

using test::code_of;
using Names = std::vector<std::string>;
using Groups = std::vector<std::optional<std::string>>;

Leaderboard grouped_toy(Groups groups, std::vector<double> weights = {}) {
  const auto t = test::toy();
  std::vector<std::vector<ScoreCell>> cells;
  for (std::size_t s = 0; s < t.num_systems(); ++s) {
    std::vector<ScoreCell> row;
    for (std::size_t k = 0; k < t.num_tasks(); ++k) row.push_back(t.score(s, k));
    cells.push_back(row);
  }
  return Leaderboard(t.systems(), t.tasks(), cells, {}, std::move(weights), std::move(groups));
}

const Groups kSplit{"g1", "g1", "g2", "g2", "g2"};

TEST(Aggregate, BasicToyBordaPicksB) {
  EXPECT_EQ(aggregate(test::toy(), parse_rule("borda")).winners(), (Names{"B"}));
}

TEST(Aggregate, EffectiveWeights) {
  const auto lb = grouped_toy(kSplit, {2, 2, 3, 3, 3});
  EXPECT_EQ(effective_weights(lb, AggregationMode::Basic), (std::vector<double>{2, 2, 3, 3, 3}));
  EXPECT_EQ(effective_weights(lb, AggregationMode::Weighted), (std::vector<double>{1, 1, 1, 1, 1}));
  const auto partial = grouped_toy({"g", "g", std::nullopt, std::nullopt, std::nullopt});
  EXPECT_EQ(effective_weights(partial, AggregationMode::Weighted), (std::vector<double>{0.5, 0.5, 1, 1, 1}));
}

TEST(Aggregate, WeightedModeBalancesGroups) {
  const auto r = aggregate(grouped_toy(kSplit), parse_rule("borda"), AggregationMode::Weighted);
  EXPECT_EQ(r.mode, AggregationMode::Weighted);
  EXPECT_DOUBLE_EQ(r.scores.at("A"), 3.0);
  EXPECT_DOUBLE_EQ(r.scores.at("B"), 10.0 / 3.0);
  EXPECT_DOUBLE_EQ(r.scores.at("C"), 19.0 / 6.0);
  EXPECT_DOUBLE_EQ(r.scores.at("D"), 2.5);
  EXPECT_EQ(r.ranking, (std::vector<Names>{{"B"}, {"C"}, {"A"}, {"D"}}));
}

// Group 1 Borda: A > C > B > D. Group 2 Borda: B > D > C > A.
TEST(Aggregate, TwoStepToyBorda) {
  const auto r = aggregate(grouped_toy(kSplit), parse_rule("borda"), AggregationMode::TwoStep);
  EXPECT_EQ(r.mode, AggregationMode::TwoStep);
  EXPECT_EQ(r.scores, (std::map<std::string, double>{{"A", 3}, {"B", 4}, {"C", 3}, {"D", 2}}));
  EXPECT_EQ(r.ranking, (std::vector<Names>{{"B"}, {"A", "C"}, {"D"}}));
}

TEST(Aggregate, TwoStepElectorsCarryMeanGroupWeight) {
  // Group 1 now counts 5 per elector against 1, so its order wins outright.
  const auto r = aggregate(grouped_toy(kSplit, {5, 5, 1, 1, 1}), parse_rule("borda"), AggregationMode::TwoStep);
  EXPECT_EQ(r.scores, (std::map<std::string, double>{{"A", 15}, {"B", 8}, {"C", 11}, {"D", 2}}));
}

TEST(Aggregate, SingleGroupTwoStepMatchesBasic) {
  const auto lb = grouped_toy({"all", "all", "all", "all", "all"});
  for (const char* id : {"borda", "plurality", "copeland", "minimax", "baldwin", "threshold"}) {
    const auto two = aggregate(lb, parse_rule(id), AggregationMode::TwoStep);
    EXPECT_EQ(two.ranking, aggregate(lb, parse_rule(id)).ranking) << id;
  }
}

TEST(Aggregate, ModesNeedGroups) {
  for (const auto mode : {AggregationMode::Weighted, AggregationMode::TwoStep}) {
    EXPECT_EQ(code_of([&] { aggregate(test::toy(), parse_rule("borda"), mode); }), ErrorCode::MissingGroups);
  }
}

TEST(Aggregate, TwoStepRejectsRulesWithoutTotalOrders) {
  const auto lb = grouped_toy(kSplit);
  for (const char* id : {"condorcet", "weakly_stable", "fishburn", "minimal_dominant", "am", "og"}) {
    EXPECT_EQ(code_of([&] { aggregate(lb, parse_rule(id), AggregationMode::TwoStep); }),
              ErrorCode::RuleUnsupportedForMode)
        << id;
  }
  EXPECT_NO_THROW(aggregate(lb, parse_rule("am"), AggregationMode::Weighted));
  EXPECT_NO_THROW(aggregate(lb, parse_rule("fishburn"), AggregationMode::Weighted));
}

TEST(Aggregate, WeightedMajorityToleratesMissingCells) {
  const Leaderboard lb({"A", "B", "C"}, {"t1", "t2", "t3"}, {{1, 0, 0}, {std::nullopt, 1, 1}, {0, std::nullopt, 2}}, {},
                       {}, Groups{"x", "y", "y"});
  // Unscaled, A and C tie; halving t3 lets A beat C and closes a cycle.
  EXPECT_EQ(aggregate(lb, parse_rule("copeland")).winners(), (Names{"C"}));
  const auto r = aggregate(lb, parse_rule("copeland"), AggregationMode::Weighted);
  EXPECT_EQ(test::as_set(r.winners()), (std::set<std::string>{"A", "B", "C"}));
}

}  // namespace
}  // namespace vnr
