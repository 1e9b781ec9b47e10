#include "vnr/cw_weights.hpp"

#include <stdexcept>

#include "vnr/errors.hpp"

namespace vnr {
namespace {

Rational row_margin(const std::vector<int>& row, std::span<const Rational> w) {
  Rational m = 0;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] != 0) m += row[j] * w[j];
  }
  return m;
}

std::optional<Rational> bound_at(const std::vector<std::optional<Rational>>& bounds, std::size_t j,
                                 std::optional<Rational> fallback) {
  return bounds.empty() ? fallback : bounds[j];
}

void check_options(const DominanceMatrix& g, const FeasibilityOptions& opts) {
  const std::size_t n = g.cols();
  if (!opts.lower.empty() && opts.lower.size() != n) throw Error(ErrorCode::VectorLengthMismatch, "lower bounds need one entry per task");
  if (!opts.upper.empty() && opts.upper.size() != n) throw Error(ErrorCode::VectorLengthMismatch, "upper bounds need one entry per task");
  if (!opts.objective.empty() && opts.objective.size() != n) throw Error(ErrorCode::VectorLengthMismatch, "objective needs one entry per task");
  if (opts.strict_margin < 0) throw Error(ErrorCode::InvalidArgument, "strict margin must be >= 0");
  if (n == 0) throw Error(ErrorCode::InfeasibleBounds, "no tasks to weight");

  Rational lo_sum = 0, hi_sum = 0;
  bool lo_finite = true, hi_finite = true;
  for (std::size_t j = 0; j < n; ++j) {
    const auto lo = bound_at(opts.lower, j, Rational(0));
    const auto hi = bound_at(opts.upper, j, std::nullopt);
    if (lo && hi && *lo > *hi) throw Error(ErrorCode::InfeasibleBounds, "lower bound exceeds upper bound on '" + g.tasks[j] + "'");
    if (lo) lo_sum += *lo; else lo_finite = false;
    if (hi) hi_sum += *hi; else hi_finite = false;
  }
  if (lo_finite && lo_sum > 1) throw Error(ErrorCode::InfeasibleBounds, "lower bounds sum above 1");
  if (hi_finite && hi_sum < 1) throw Error(ErrorCode::InfeasibleBounds, "upper bounds sum below 1");
}

// gmpxx comparisons assume canonical form, which mpq_class(num, den) skips.
FeasibilityOptions canonical(FeasibilityOptions o) {
  for (auto* side : {&o.lower, &o.upper}) {
    for (auto& b : *side) {
      if (b) b->canonicalize();
    }
  }
  o.strict_margin.canonicalize();
  for (auto& c : o.objective) c.canonicalize();
  return o;
}

bool satisfies_canonical(const DominanceMatrix& g, const FeasibilityOptions& opts, std::span<const Rational> w) {
  if (w.size() != g.cols()) return false;
  Rational total = 0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    const auto lo = bound_at(opts.lower, j, Rational(0));
    const auto hi = bound_at(opts.upper, j, std::nullopt);
    if (lo && w[j] < *lo) return false;
    if (hi && w[j] > *hi) return false;
    total += w[j];
  }
  if (total != 1) return false;
  for (const auto& row : g.entries) {
    if (row_margin(row, w) < opts.strict_margin) return false;
  }
  return true;
}

std::vector<std::size_t> active_rows(const DominanceMatrix& g, const Rational& margin, std::span<const Rational> w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (row_margin(g.entries[i], w) == margin) out.push_back(i);
  }
  return out;
}

}  // namespace

std::vector<double> FeasibilityResult::witness_values() const {
  std::vector<double> out;
  if (witness) {
    for (const auto& q : *witness) out.push_back(to_double(q));
  }
  return out;
}

DominanceMatrix build_dominance_matrix(const Leaderboard& lb, std::string_view system) {
  const std::size_t m = lb.system_index(system);
  DominanceMatrix g;
  g.system = std::string(system);
  g.tasks = lb.tasks();
  for (std::size_t r = 0; r < lb.num_systems(); ++r) {
    if (r == m) continue;
    std::vector<int> row(lb.num_tasks(), 0);
    for (std::size_t t = 0; t < lb.num_tasks(); ++t) {
      const auto a = lb.effective_score(m, t);
      const auto b = lb.effective_score(r, t);
      if (a && b) row[t] = (*a > *b) - (*a < *b);
    }
    g.rivals.push_back(lb.systems()[r]);
    g.entries.push_back(std::move(row));
  }
  return g;
}

bool satisfies(const DominanceMatrix& g, const FeasibilityOptions& opts, std::span<const Rational> w) {
  std::vector<Rational> copy(w.begin(), w.end());
  for (auto& q : copy) q.canonicalize();
  return satisfies_canonical(g, canonical(opts), copy);
}

FeasibilityResult find_cw_weights(const DominanceMatrix& g, const FeasibilityOptions& raw) {
  const FeasibilityOptions opts = canonical(raw);
  check_options(g, opts);
  const std::size_t n = g.cols();
  FeasibilityResult result;

  if (opts.objective.empty()) {
    const std::vector<Rational> uniform(n, Rational(1, static_cast<unsigned long>(n)));
    if (satisfies_canonical(g, opts, uniform)) {
      result.status = Prospect::Prospective;
      result.active_constraints = active_rows(g, opts.strict_margin, uniform);
      result.witness = uniform;
      return result;
    }
  }

  // w_j = lower_j + x_j, or x_j - y_j when unbounded below; all x, y >= 0.
  std::vector<std::size_t> pos(n), neg(n, n);
  std::vector<Rational> shift(n, Rational(0));
  std::size_t vars = 0;
  for (std::size_t j = 0; j < n; ++j) {
    pos[j] = vars++;
    if (const auto lo = bound_at(opts.lower, j, Rational(0))) {
      shift[j] = *lo;
    } else {
      neg[j] = vars++;
    }
  }
  auto expand = [&](auto coefficient) {
    std::vector<Rational> row(vars, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
      const Rational c = coefficient(j);
      row[pos[j]] = c;
      if (neg[j] != n) row[neg[j]] = -c;
    }
    return row;
  };

  lp::Problem problem;
  problem.num_vars = vars;
  for (const auto& gr : g.entries) {
    Rational rhs = opts.strict_margin;
    for (std::size_t j = 0; j < n; ++j) rhs -= gr[j] * shift[j];
    problem.constraints.push_back({expand([&](std::size_t j) { return Rational(gr[j]); }), lp::Relation::GreaterEqual, rhs});
  }
  Rational sum_rhs = 1;
  for (const auto& s : shift) sum_rhs -= s;
  problem.constraints.push_back({expand([](std::size_t) { return Rational(1); }), lp::Relation::Equal, sum_rhs});
  for (std::size_t j = 0; j < n; ++j) {
    if (const auto hi = bound_at(opts.upper, j, std::nullopt)) {
      problem.constraints.push_back(
          {expand([&](std::size_t k) { return Rational(k == j ? 1 : 0); }), lp::Relation::LessEqual, *hi - shift[j]});
    }
  }
  if (!opts.objective.empty()) problem.objective = expand([&](std::size_t j) { return opts.objective[j]; });

  lp::Solution sol = lp::solve(problem);
  if (sol.status == lp::Status::Unbounded) {
    result.objective_unbounded = true;
    problem.objective.clear();
    sol = lp::solve(problem);
  }
  if (sol.status == lp::Status::Infeasible) return result;

  std::vector<Rational> w(n);
  for (std::size_t j = 0; j < n; ++j) {
    w[j] = shift[j] + sol.x[pos[j]];
    if (neg[j] != n) w[j] -= sol.x[neg[j]];
  }
  if (!satisfies_canonical(g, opts, w)) throw std::logic_error("solver witness failed exact verification");

  result.status = Prospect::Prospective;
  result.active_constraints = active_rows(g, opts.strict_margin, w);
  if (!opts.objective.empty() && !result.objective_unbounded) {
    Rational value = 0;
    for (std::size_t j = 0; j < n; ++j) value += opts.objective[j] * w[j];
    result.objective_value = value;
  }
  result.witness = std::move(w);
  return result;
}

bool is_prospective(const Leaderboard& lb, std::string_view system) {
  return find_cw_weights(build_dominance_matrix(lb, system)).prospective();
}

}  // namespace vnr
