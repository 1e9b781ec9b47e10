#include "vnr/rational_simplex.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "vnr/errors.hpp"

namespace vnr {

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  auto fail = [&]() -> Rational { throw Error(ErrorCode::ParseError, "not a number: '" + s + "'"); };
  if (s.empty()) return fail();

  if (s.find('/') != std::string::npos) {
    Rational q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0) return fail();
    q.canonicalize();
    return q;
  }

  std::size_t i = 0;
  bool negative = false;
  if (s[i] == '+' || s[i] == '-') negative = s[i++] == '-';
  std::string digits;
  long exponent = 0;
  bool seen_digit = false, seen_point = false;
  for (; i < s.size(); ++i) {
    const char ch = s[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits += ch;
      seen_digit = true;
      if (seen_point) --exponent;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) return fail();
  if (i < s.size()) {
    if (s[i] != 'e' && s[i] != 'E') return fail();
    const std::string tail = s.substr(i + 1);
    if (tail.empty()) return fail();
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(tail, &used);
    } catch (const std::exception&) {
      return fail();
    }
    if (used != tail.size() || e > 4096 || e < -4096) return fail();
    exponent += e;
  }

  mpz_class mantissa(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational q = exponent < 0 ? Rational(mantissa, scale) : Rational(mantissa * scale);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

double to_double(const Rational& q) {
  const double d = q.get_d();
  double best = d;
  Rational best_err = abs(q - Rational(d));
  for (const double c : {std::nextafter(d, -HUGE_VAL), std::nextafter(d, HUGE_VAL)}) {
    const Rational err = abs(q - Rational(c));
    if (err < best_err) {
      best = c;
      best_err = err;
    }
  }
  return best;
}

namespace lp {
namespace {

// Dense tableau. Row r of `a` holds the constraint coefficients followed by
// the right-hand side; `cost` is the reduced-cost row with -z in the last slot.
struct Tableau {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::vector<Rational>> a;
  std::vector<Rational> cost;
  std::vector<std::size_t> basis;

  void pivot(std::size_t r, std::size_t c) {
    const Rational p = a[r][c];
    for (auto& v : a[r]) v /= p;
    auto eliminate = [&](std::vector<Rational>& row) {
      if (row[c] == 0) return;
      const Rational f = row[c];
      for (std::size_t j = 0; j <= cols; ++j) {
        if (a[r][j] != 0) row[j] -= f * a[r][j];
      }
    };
    for (std::size_t i = 0; i < rows; ++i) {
      if (i != r) eliminate(a[i]);
    }
    eliminate(cost);
    basis[r] = c;
  }

  void set_cost(const std::vector<Rational>& c) {
    cost.assign(cols + 1, Rational(0));
    for (std::size_t j = 0; j < c.size(); ++j) cost[j] = c[j];
    for (std::size_t i = 0; i < rows; ++i) {
      const Rational cb = cost[basis[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j <= cols; ++j) cost[j] -= cb * a[i][j];
    }
  }

  // Bland's rule: lowest-index improving column, lowest-index leaving variable.
  // Returns false when unbounded.
  bool optimize(std::size_t allowed_cols) {
    for (;;) {
      std::size_t enter = allowed_cols;
      for (std::size_t j = 0; j < allowed_cols; ++j) {
        if (cost[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == allowed_cols) return true;

      std::size_t leave = rows;
      Rational best;
      for (std::size_t i = 0; i < rows; ++i) {
        if (a[i][enter] <= 0) continue;
        const Rational ratio = a[i][cols] / a[i][enter];
        if (leave == rows || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows) return false;
      pivot(leave, enter);
    }
  }

  void drop_row(std::size_t r) {
    a.erase(a.begin() + static_cast<std::ptrdiff_t>(r));
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(r));
    --rows;
  }
};

}  // namespace

Solution solve(const Problem& problem) {
  const std::size_t n = problem.num_vars;
  for (const auto& con : problem.constraints) {
    if (con.coefficients.size() != n) throw Error(ErrorCode::InvalidArgument, "constraint width differs from variable count");
  }
  if (!problem.objective.empty() && problem.objective.size() != n) {
    throw Error(ErrorCode::InvalidArgument, "objective width differs from variable count");
  }

  // Normalize to rhs >= 0.
  std::vector<Constraint> rows = problem.constraints;
  std::vector<Rational> objective = problem.objective;
  for (auto& c : objective) c.canonicalize();
  for (auto& con : rows) {
    for (auto& v : con.coefficients) v.canonicalize();
    con.rhs.canonicalize();
    if (con.rhs >= 0) continue;
    for (auto& v : con.coefficients) v = -v;
    con.rhs = -con.rhs;
    if (con.relation == Relation::LessEqual) {
      con.relation = Relation::GreaterEqual;
    } else if (con.relation == Relation::GreaterEqual) {
      con.relation = Relation::LessEqual;
    }
  }

  std::size_t slacks = 0, artificials = 0;
  for (const auto& con : rows) {
    if (con.relation != Relation::Equal) ++slacks;
    if (con.relation != Relation::LessEqual) ++artificials;
  }

  Tableau t;
  t.rows = rows.size();
  t.cols = n + slacks + artificials;
  const std::size_t first_artificial = n + slacks;
  t.a.assign(t.rows, std::vector<Rational>(t.cols + 1, Rational(0)));
  t.basis.assign(t.rows, 0);
  std::size_t next_slack = n, next_art = first_artificial;
  for (std::size_t i = 0; i < t.rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.a[i][j] = rows[i].coefficients[j];
    t.a[i][t.cols] = rows[i].rhs;
    switch (rows[i].relation) {
      case Relation::LessEqual:
        t.a[i][next_slack] = 1;
        t.basis[i] = next_slack++;
        break;
      case Relation::GreaterEqual:
        t.a[i][next_slack++] = -1;
        t.a[i][next_art] = 1;
        t.basis[i] = next_art++;
        break;
      case Relation::Equal:
        t.a[i][next_art] = 1;
        t.basis[i] = next_art++;
        break;
    }
  }

  Solution sol;
  if (artificials > 0) {
    std::vector<Rational> phase1(t.cols, Rational(0));
    for (std::size_t j = first_artificial; j < t.cols; ++j) phase1[j] = 1;
    t.set_cost(phase1);
    t.optimize(t.cols);
    if (t.cost[t.cols] != 0) {
      sol.status = Status::Infeasible;
      return sol;
    }
    // Drive remaining (zero-valued) artificials out of the basis.
    for (std::size_t i = 0; i < t.rows;) {
      if (t.basis[i] < first_artificial) {
        ++i;
        continue;
      }
      std::size_t c = first_artificial;
      for (std::size_t j = 0; j < first_artificial; ++j) {
        if (t.a[i][j] != 0) {
          c = j;
          break;
        }
      }
      if (c == first_artificial) {
        t.drop_row(i);
      } else {
        t.pivot(i, c);
        ++i;
      }
    }
  }

  std::vector<Rational> phase2(first_artificial, Rational(0));
  for (std::size_t j = 0; j < objective.size(); ++j) phase2[j] = objective[j];
  t.set_cost(phase2);
  if (!t.optimize(first_artificial)) {
    sol.status = Status::Unbounded;
    return sol;
  }

  sol.status = Status::Optimal;
  sol.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows; ++i) {
    if (t.basis[i] < n) sol.x[t.basis[i]] = t.a[i][t.cols];
  }
  sol.objective = 0;
  for (std::size_t j = 0; j < objective.size(); ++j) sol.objective += objective[j] * sol.x[j];
  return sol;
}

}  // namespace lp
}  // namespace vnr
