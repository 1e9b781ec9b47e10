#include <gtest/gtest.h>

#include <random>

#include "oracle/oracle.hpp"
#include "error_code.hpp"
#include "support.hpp"
#include "vnr/cw_weights.hpp"
#include "vnr/errors.hpp"
#include "vnr/rational_simplex.hpp"

namespace vnr {
namespace {

using Q = Rational;
using Weights = std::vector<Q>;

using test::code_of;

DominanceMatrix single_row(std::vector<int> row) {
  DominanceMatrix g;
  g.system = "m";
  g.rivals = {"r"};
  for (std::size_t j = 0; j < row.size(); ++j) g.tasks.push_back("t" + std::to_string(j));
  g.entries = {std::move(row)};
  return g;
}

TEST(ParseRational, ExactDecimalsFractionsAndExponents) {
  EXPECT_EQ(parse_rational("0.1"), Q(1, 10));
  EXPECT_EQ(parse_rational("-2.5e-3"), Q(-1, 400));
  EXPECT_EQ(parse_rational("3/7"), Q(3, 7));
  EXPECT_EQ(parse_rational("6/4"), Q(3, 2));
  EXPECT_EQ(parse_rational("1e2"), Q(100));
  EXPECT_EQ(parse_rational("+.5"), Q(1, 2));
  for (const char* bad : {"", "abc", "1/0", "1.2.3", "1e", ".", "+", "1x", "e5"}) {
    EXPECT_EQ(code_of([&] { parse_rational(bad); }), ErrorCode::ParseError) << bad;
  }
}

TEST(ParseRational, ToDoubleRoundsToNearest) {
  EXPECT_EQ(to_double(Q(1, 5)), 0.2);
  EXPECT_EQ(to_double(Q(1, 3)), 1.0 / 3.0);
  EXPECT_EQ(to_double(Q(-2, 3)), -2.0 / 3.0);
}

TEST(Simplex, OptimalInfeasibleUnbounded) {
  lp::Problem p;
  p.num_vars = 2;
  p.constraints = {{{1, 1}, lp::Relation::LessEqual, 4}, {{1, 0}, lp::Relation::LessEqual, 3}};
  p.objective = {-1, -2};
  auto s = lp::solve(p);
  ASSERT_EQ(s.status, lp::Status::Optimal);
  EXPECT_EQ(s.objective, Q(-8));
  EXPECT_EQ(s.x, (Weights{0, 4}));

  p.constraints.push_back({{1, 0}, lp::Relation::GreaterEqual, 5});
  EXPECT_EQ(lp::solve(p).status, lp::Status::Infeasible);

  lp::Problem u;
  u.num_vars = 1;
  u.constraints = {{{1}, lp::Relation::GreaterEqual, 1}};
  u.objective = {-1};
  EXPECT_EQ(lp::solve(u).status, lp::Status::Unbounded);
}

TEST(Simplex, RedundantEqualitiesAndNegativeRhs) {
  lp::Problem p;
  p.num_vars = 2;
  p.constraints = {{{1, 1}, lp::Relation::Equal, 1},
                   {{2, 2}, lp::Relation::Equal, 2},
                   {{-1, 0}, lp::Relation::LessEqual, Q(-1, 3)}};
  p.objective = {1, 0};
  const auto s = lp::solve(p);
  ASSERT_EQ(s.status, lp::Status::Optimal);
  EXPECT_EQ(s.x, (Weights{Q(1, 3), Q(2, 3)}));
  EXPECT_EQ(code_of([] {
              lp::Problem bad;
              bad.num_vars = 2;
              bad.constraints = {{{1}, lp::Relation::Equal, 1}};
              lp::solve(bad);
            }),
            ErrorCode::InvalidArgument);
}

TEST(DominanceMatrix, ToyRowsForB) {
  const auto g = build_dominance_matrix(test::toy(), "B");
  EXPECT_EQ(g.rivals, (std::vector<std::string>{"A", "C", "D"}));
  EXPECT_EQ(g.entries[0], (std::vector<int>{-1, -1, 1, 1, 1}));
  EXPECT_EQ(g.entries[1], (std::vector<int>{1, -1, 1, -1, 1}));
  EXPECT_EQ(g.entries[2], (std::vector<int>{1, -1, 1, 1, -1}));
  EXPECT_EQ(code_of([] { build_dominance_matrix(test::toy(), "Z"); }), ErrorCode::UnknownSystem);
}

TEST(DominanceMatrix, MissingAndEqualScoresGiveZero) {
  const Leaderboard lb({"m", "r", "s"}, {"t1", "t2"}, {{std::nullopt, std::nullopt}, {1, 2}, {3, 4}});
  const auto g = build_dominance_matrix(lb, "m");
  EXPECT_EQ(g.entries, (std::vector<std::vector<int>>{{0, 0}, {0, 0}}));
  const Leaderboard tie({"m", "r"}, {"t1", "t2"}, {{1, 5}, {1, 2}}, {Direction::Maximize, Direction::Minimize});
  EXPECT_EQ(build_dominance_matrix(tie, "m").entries, (std::vector<std::vector<int>>{{0, -1}}));
}

TEST(CwWeights, ToyBTakesUniformWeights) {
  const auto r = find_cw_weights(build_dominance_matrix(test::toy(), "B"));
  ASSERT_TRUE(r.prospective());
  EXPECT_EQ(*r.witness, Weights(5, Q(1, 5)));
  EXPECT_EQ(r.witness_values(), std::vector<double>(5, 0.2));
  EXPECT_TRUE(is_prospective(test::toy(), "B"));
}

TEST(CwWeights, ToyAIsProspective) {
  // Independent check by vertex enumeration before freezing the answer.
  oracle::Instance in;
  in.systems = 4;
  in.tasks = 5;
  in.score = {{4, 4, 1, 1, 1}, {3, 1, 4, 3, 3}, {2, 3, 2, 4, 2}, {1, 2, 3, 2, 4}};
  in.weight.assign(5, 1);
  in.minimize.assign(5, false);
  ASSERT_TRUE(oracle::cw_feasible(oracle::dominance(in, 0), 5, 0, Weights(5, 0), Weights(5, 1)).has_value());

  const auto g = build_dominance_matrix(test::toy(), "A");
  const auto r = find_cw_weights(g);
  ASSERT_TRUE(r.prospective());
  EXPECT_EQ(*r.witness, (Weights{Q(1, 2), 0, Q(1, 2), 0, 0}));
  EXPECT_EQ(r.active_constraints, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(satisfies(g, {}, *r.witness));
  EXPECT_TRUE(is_prospective(test::toy(), "A"));
}

TEST(CwWeights, WinsOnTwoOfThreeTasks) {
  const auto g = single_row({1, 1, -1});
  const Weights half{Q(1, 2), Q(1, 2), 0};
  EXPECT_TRUE(satisfies(g, {}, half));
  FeasibilityOptions strict;
  strict.strict_margin = 1;
  const auto r = find_cw_weights(g, strict);
  ASSERT_TRUE(r.prospective());
  EXPECT_EQ((*r.witness)[2], 0);
  EXPECT_EQ(r.active_constraints, (std::vector<std::size_t>{0}));
  strict.strict_margin = 2;
  EXPECT_FALSE(find_cw_weights(g, strict).prospective());
}

TEST(CwWeights, StrictlyDominatedSystemIsNotProspective) {
  const auto r = find_cw_weights(single_row({-1, -1, -1}));
  EXPECT_FALSE(r.prospective());
  EXPECT_FALSE(r.witness.has_value());
  const Leaderboard lb({"m", "r"}, {"t1", "t2"}, {{1, 1}, {2, 2}});
  EXPECT_FALSE(is_prospective(lb, "m"));
}

TEST(CwWeights, SingleSystemIsVacuouslyProspective) {
  const Leaderboard lb({"m"}, {"t1", "t2"}, {{1, 2}});
  const auto g = build_dominance_matrix(lb, "m");
  EXPECT_EQ(g.rows(), 0u);
  EXPECT_TRUE(is_prospective(lb, "m"));
}

TEST(CwWeights, ContradictoryBoundsAreRejected) {
  const auto g = single_row({1, -1});
  auto with = [&](std::vector<std::optional<Q>> lo, std::vector<std::optional<Q>> hi) {
    FeasibilityOptions o;
    o.lower = std::move(lo);
    o.upper = std::move(hi);
    return code_of([&] { find_cw_weights(g, o); });
  };
  EXPECT_EQ(with({Q(1, 2), Q(2, 3)}, {}), ErrorCode::InfeasibleBounds);
  EXPECT_EQ(with({}, {Q(1, 4), Q(1, 4)}), ErrorCode::InfeasibleBounds);
  EXPECT_EQ(with({Q(1, 2), 0}, {Q(1, 3), 1}), ErrorCode::InfeasibleBounds);
  FeasibilityOptions neg;
  neg.strict_margin = -1;
  EXPECT_EQ(code_of([&] { find_cw_weights(g, neg); }), ErrorCode::InvalidArgument);
  DominanceMatrix empty;
  EXPECT_EQ(code_of([&] { find_cw_weights(empty); }), ErrorCode::InfeasibleBounds);
}

TEST(CwWeights, BoundsShapeTheWitness) {
  const auto g = single_row({1, -1, -1});
  EXPECT_FALSE(find_cw_weights(g).witness->empty());
  FeasibilityOptions o;
  o.upper = {std::nullopt, Q(1, 4), Q(1, 4)};
  const auto r = find_cw_weights(g, o);
  ASSERT_TRUE(r.prospective());
  EXPECT_TRUE(satisfies(g, o, *r.witness));
  o.lower = {std::nullopt, Q(1, 3), Q(1, 3)};
  o.upper = {};
  EXPECT_FALSE(find_cw_weights(g, o).prospective());
}

TEST(CwWeights, ObjectiveIsMinimized) {
  const auto g = build_dominance_matrix(test::toy(), "B");
  FeasibilityOptions o;
  o.objective = {0, -1, 0, 0, 0};
  const auto r = find_cw_weights(g, o);
  ASSERT_TRUE(r.prospective());
  EXPECT_EQ(*r.objective_value, Q(-1, 2));
  EXPECT_EQ((*r.witness)[1], Q(1, 2));
  EXPECT_TRUE(satisfies(g, o, *r.witness));
}

TEST(CwWeights, UnboundedObjectiveWithFreeWeights) {
  const auto g = single_row({1, 1});
  FeasibilityOptions o;
  o.lower = {std::nullopt, std::nullopt};
  o.objective = {1, 0};
  const auto r = find_cw_weights(g, o);
  EXPECT_TRUE(r.prospective());
  EXPECT_TRUE(r.objective_unbounded);
  EXPECT_FALSE(r.objective_value.has_value());
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(satisfies(g, o, *r.witness));
}

// Looser bounds or a smaller margin never turn a prospective system into a
// non-prospective one, and every witness passes the exact check.
TEST(CwWeightsProperties, MonotoneRelaxationAndVerifiedWitnesses) {
  std::mt19937_64 rng(17);
  oracle::GenOptions gen;
  gen.max_systems = 4;
  gen.max_tasks = 4;
  gen.missing = true;
  for (int trial = 0; trial < 300; ++trial) {
    const auto in = oracle::random_instance(rng, gen);
    const auto lb = in.leaderboard();
    const auto g = build_dominance_matrix(lb, lb.systems()[0]);
    const std::size_t n = g.cols();
    FeasibilityOptions tight;
    tight.strict_margin = Q(static_cast<long>(rng() % 3)) / 4;
    for (std::size_t j = 0; j < n; ++j) {
      tight.lower.push_back(Q(static_cast<long>(rng() % 2)) / static_cast<long>(4 * n));
      tight.upper.push_back(Q(2 + static_cast<long>(rng() % 3)) / static_cast<long>(2 * n));
    }
    FeasibilityOptions loose;
    loose.strict_margin = tight.strict_margin / 2;
    const auto a = find_cw_weights(g, tight);
    const auto b = find_cw_weights(g, loose);
    if (a.prospective()) {
      EXPECT_TRUE(b.prospective()) << "trial " << trial;
      EXPECT_TRUE(satisfies(g, tight, *a.witness));
    }
    if (b.prospective()) EXPECT_TRUE(satisfies(g, loose, *b.witness));

    std::vector<std::vector<int>> rows(g.entries.begin(), g.entries.end());
    Weights lo, hi;
    for (std::size_t j = 0; j < n; ++j) {
      lo.push_back(*tight.lower[j]);
      hi.push_back(*tight.upper[j]);
    }
    const bool expected =
        oracle::cw_feasible(rows, static_cast<int>(n), tight.strict_margin, lo, hi).has_value();
    EXPECT_EQ(a.prospective(), expected) << "trial " << trial;
  }
}

}  // namespace
}  // namespace vnr
