#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace vnr {

using Rational = mpq_class;

/// Exact decimal or fraction parsing: "0.1", "-2.5e-3", "3/7".
Rational parse_rational(std::string_view text);

/// Nearest double to `q` (mpq_class::get_d truncates).
double to_double(const Rational& q);

namespace lp {

enum class Relation { LessEqual, Equal, GreaterEqual };

struct Constraint {
  std::vector<Rational> coefficients;
  Relation relation = Relation::GreaterEqual;
  Rational rhs;
};

/// minimize objective . x  subject to  constraints,  x >= 0.
struct Problem {
  std::size_t num_vars = 0;
  std::vector<Constraint> constraints;
  std::vector<Rational> objective;  // empty: pure feasibility
};

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
  Status status = Status::Infeasible;
  std::vector<Rational> x;
  Rational objective;
};

/// Two-phase dense tableau simplex with Bland's rule, in exact arithmetic.
Solution solve(const Problem& problem);

}  // namespace lp
}  // namespace vnr
