#include "vnr/majority.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "vnr/errors.hpp"
#include "vnr/numeric.hpp"

namespace vnr {
namespace {

using Members = std::vector<char>;

bool subset_of(const Members& a, const Members& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] && !b[i]) return false;
  }
  return true;
}

bool strict_subset_of(const Members& a, const Members& b) { return subset_of(a, b) && a != b; }

std::vector<std::size_t> indices_of(const Members& m) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i]) out.push_back(i);
  }
  return out;
}

/// Union of the inclusion-minimal members of `candidates`.
std::vector<std::size_t> union_of_minimal(const std::vector<Members>& candidates, std::size_t n) {
  Members result(n, 0);
  for (const auto& c : candidates) {
    bool minimal = std::none_of(candidates.begin(), candidates.end(),
                                [&](const Members& other) { return strict_subset_of(other, c); });
    if (!minimal) continue;
    for (std::size_t i = 0; i < n; ++i) result[i] = result[i] || c[i];
  }
  return indices_of(result);
}

/// Systems not dominated by any other under `dominates(a, b)`.
std::vector<std::size_t> undominated_under(std::size_t n, const std::function<bool(std::size_t, std::size_t)>& dominates) {
  std::vector<std::size_t> out;
  for (std::size_t b = 0; b < n; ++b) {
    bool dominated = false;
    for (std::size_t a = 0; a < n && !dominated; ++a) dominated = a != b && dominates(a, b);
    if (!dominated) out.push_back(b);
  }
  return out;
}

struct CounterSets {
  std::vector<Members> lower;
  std::vector<Members> upper;
};

CounterSets counter_sets(const MajorityGraph& g) {
  const std::size_t n = g.size();
  CounterSets cs{std::vector<Members>(n, Members(n, 0)), std::vector<Members>(n, Members(n, 0))};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.beats(a, b)) {
        cs.lower[a][b] = 1;
        cs.upper[b][a] = 1;
      }
    }
  }
  return cs;
}

std::vector<std::size_t> all_indices(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

}  // namespace

MajorityGraph MajorityGraph::from_profile(const RankProfile& profile) {
  const std::size_t n = profile.num_systems();
  MajorityGraph g;
  g.systems_ = profile.systems();
  g.margin_.assign(n * n, 0.0);
  g.above_.assign(n * n, 0.0);
  g.edge_.assign(n * n, 0);
  for (std::size_t v = 0; v < profile.num_voters(); ++v) {
    const double w = profile.weight(v);
    for (std::size_t a = 0; a < n; ++a) {
      const auto& pa = profile.position(v, a);
      if (!pa) continue;
      for (std::size_t b = 0; b < n; ++b) {
        const auto& pb = profile.position(v, b);
        if (a == b || !pb) continue;
        if (*pa < *pb) {
          g.margin_[a * n + b] += w;
          g.above_[a * n + b] += w;
        } else if (*pa > *pb) {
          g.margin_[a * n + b] -= w;
        }
      }
    }
  }
  const double scale = profile.total_weight();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const double m = g.margin_[a * n + b];
      g.edge_[a * n + b] = (m > 0.0 && !tied(m, 0.0, scale)) ? 1 : 0;
    }
  }
  return g;
}

std::vector<std::size_t> MajorityGraph::lower(std::size_t m) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x) {
    if (beats(m, x)) out.push_back(x);
  }
  return out;
}

std::vector<std::size_t> MajorityGraph::upper(std::size_t m) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < size(); ++x) {
    if (beats(x, m)) out.push_back(x);
  }
  return out;
}

std::vector<MajorityGraph::Edge> MajorityGraph::edges() const {
  std::vector<Edge> out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) {
      if (beats(a, b)) out.push_back({a, b, margin(a, b), support(a, b)});
    }
  }
  return out;
}

MajorityGraph build_majority_graph(const Leaderboard& lb, const std::optional<std::vector<double>>& weights) {
  ProfileOptions opts;
  opts.missing_tolerant = true;
  opts.weights = weights;
  return MajorityGraph::from_profile(build_profile(lb, opts));
}

std::optional<std::size_t> condorcet_winner(const MajorityGraph& g) {
  for (std::size_t c = 0; c < g.size(); ++c) {
    if (g.lower(c).size() == g.size() - 1) return c;
  }
  return std::nullopt;
}

std::optional<std::size_t> condorcet_loser(const MajorityGraph& g) {
  if (g.size() < 2) return std::nullopt;
  for (std::size_t c = 0; c < g.size(); ++c) {
    if (g.upper(c).size() == g.size() - 1) return c;
  }
  return std::nullopt;
}

RuleOutcome copeland(const MajorityGraph& g, CopelandVariant variant) {
  const std::size_t n = g.size();
  std::vector<double> score(n);
  for (std::size_t m = 0; m < n; ++m) {
    const auto l = static_cast<double>(g.lower(m).size());
    const auto u = static_cast<double>(g.upper(m).size());
    switch (variant) {
      case CopelandVariant::I: score[m] = l - u; break;
      case CopelandVariant::II: score[m] = l; break;
      case CopelandVariant::III: score[m] = u; break;
    }
  }
  const bool higher_better = variant != CopelandVariant::III;
  const char* id = variant == CopelandVariant::I ? "copeland" : variant == CopelandVariant::II ? "copeland_ii" : "copeland_iii";
  const auto all = all_indices(n);
  return make_outcome(id, g.systems(), group_by_score(all, score, higher_better), score);
}

RuleOutcome minimax(const MajorityGraph& g) {
  const std::size_t n = g.size();
  std::vector<double> rank(n, 0.0);
  for (std::size_t m = 0; m < n; ++m) {
    double worst = 0.0;
    for (std::size_t b = 0; b < n; ++b) worst = std::max(worst, g.support(b, m));
    rank[m] = -worst;
  }
  const auto all = all_indices(n);
  return make_outcome("minimax", g.systems(), group_by_score(all, rank, true), rank);
}

std::vector<std::size_t> minimal_dominant_set(const MajorityGraph& g) {
  // The smallest dominant set containing v is the closure of {v} under
  // "x must join if some member fails to beat x"; every minimal dominant set
  // is such a closure.
  const std::size_t n = g.size();
  std::vector<Members> closures;
  for (std::size_t v = 0; v < n; ++v) {
    Members q(n, 0);
    q[v] = 1;
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t x = 0; x < n; ++x) {
        if (q[x]) continue;
        for (std::size_t m = 0; m < n; ++m) {
          if (q[m] && !g.beats(m, x)) {
            q[x] = 1;
            grew = true;
            break;
          }
        }
      }
    }
    closures.push_back(std::move(q));
  }
  return union_of_minimal(closures, n);
}

std::vector<std::size_t> minimal_undominated_set(const MajorityGraph& g) {
  // Closure of {v} under "whoever beats a member must join".
  const std::size_t n = g.size();
  std::vector<Members> closures;
  for (std::size_t v = 0; v < n; ++v) {
    Members q(n, 0);
    q[v] = 1;
    std::vector<std::size_t> stack{v};
    while (!stack.empty()) {
      const std::size_t m = stack.back();
      stack.pop_back();
      for (std::size_t x = 0; x < n; ++x) {
        if (!q[x] && g.beats(x, m)) {
          q[x] = 1;
          stack.push_back(x);
        }
      }
    }
    closures.push_back(std::move(q));
  }
  return union_of_minimal(closures, n);
}

std::vector<std::size_t> uncovered_set(const MajorityGraph& g, UncoveredVariant variant) {
  const auto cs = counter_sets(g);
  if (variant == UncoveredVariant::I) {
    return undominated_under(g.size(), [&](std::size_t a, std::size_t b) { return strict_subset_of(cs.lower[b], cs.lower[a]); });
  }
  return undominated_under(g.size(), [&](std::size_t a, std::size_t b) { return g.beats(a, b) && subset_of(cs.upper[a], cs.upper[b]); });
}

std::vector<std::size_t> richelson(const MajorityGraph& g) {
  const auto cs = counter_sets(g);
  return undominated_under(g.size(), [&](std::size_t a, std::size_t b) {
    const bool l_contains = subset_of(cs.lower[b], cs.lower[a]);
    const bool u_within = subset_of(cs.upper[a], cs.upper[b]);
    return l_contains && u_within && (cs.lower[a] != cs.lower[b] || cs.upper[a] != cs.upper[b]);
  });
}

std::vector<std::size_t> fishburn(const MajorityGraph& g) {
  const auto cs = counter_sets(g);
  return undominated_under(g.size(), [&](std::size_t a, std::size_t b) { return strict_subset_of(cs.upper[a], cs.upper[b]); });
}

std::vector<std::size_t> minimal_weakly_stable_set(const MajorityGraph& g) {
  const std::size_t n = g.size();
  if (n > 64) throw Error(ErrorCode::InvalidArgument, "weakly stable set search supports at most 64 systems");
  using Mask = std::uint64_t;
  std::vector<Mask> beaten_by(n, 0);  // beaten_by[y] = systems beating y
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (g.beats(a, b)) beaten_by[b] |= Mask{1} << a;
    }
  }

  // Branch on the first violated requirement "y beats member x, so y joins or
  // some member beats y". Every weakly stable superset of the current set
  // satisfies one branch, so each minimal weakly stable set is reached as a
  // leaf.
  std::vector<Mask> found;
  std::unordered_set<Mask> visited;
  std::function<void(Mask)> search = [&](Mask q) {
    if (!visited.insert(q).second) return;
    for (Mask f : found) {
      if ((f & q) == f && f != q) return;
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (!(q >> x & 1)) continue;
      Mask attackers = beaten_by[x] & ~q;
      while (attackers) {
        const auto y = static_cast<std::size_t>(std::countr_zero(attackers));
        attackers &= attackers - 1;
        if (beaten_by[y] & q) continue;
        search(q | Mask{1} << y);
        Mask defenders = beaten_by[y] & ~q;
        while (defenders) {
          const auto z = static_cast<std::size_t>(std::countr_zero(defenders));
          defenders &= defenders - 1;
          search(q | Mask{1} << z);
        }
        return;
      }
    }
    found.push_back(q);
  };
  for (std::size_t v = 0; v < n; ++v) search(Mask{1} << v);

  Mask result = 0;
  for (Mask f : found) {
    const bool minimal = std::none_of(found.begin(), found.end(), [&](Mask o) { return (o & f) == o && o != f; });
    if (minimal) result |= f;
  }
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (result >> i & 1) out.push_back(i);
  }
  return out;
}

RuleOutcome apply_majority_rule(const RankProfile& profile, const Rule& rule) {
  const auto g = MajorityGraph::from_profile(profile);
  const auto& names = g.systems();
  switch (rule.kind) {
    case RuleKind::Condorcet: {
      const auto cw = condorcet_winner(g);
      auto out = make_choice_outcome("condorcet", names, cw ? std::vector<std::size_t>{*cw} : std::vector<std::size_t>{});
      if (!cw) out.diagnostics.push_back("no Condorcet winner");
      return out;
    }
    case RuleKind::CopelandI: return copeland(g, CopelandVariant::I);
    case RuleKind::CopelandII: return copeland(g, CopelandVariant::II);
    case RuleKind::CopelandIII: return copeland(g, CopelandVariant::III);
    case RuleKind::Minimax: return minimax(g);
    case RuleKind::MinimalDominantSet: return make_choice_outcome("minimal_dominant", names, minimal_dominant_set(g));
    case RuleKind::MinimalUndominatedSet:
      return make_choice_outcome("minimal_undominated", names, minimal_undominated_set(g));
    case RuleKind::UncoveredSetI: return make_choice_outcome("uncovered_i", names, uncovered_set(g, UncoveredVariant::I));
    case RuleKind::UncoveredSetII: return make_choice_outcome("uncovered_ii", names, uncovered_set(g, UncoveredVariant::II));
    case RuleKind::Richelson: return make_choice_outcome("richelson", names, richelson(g));
    case RuleKind::Fishburn: return make_choice_outcome("fishburn", names, fishburn(g));
    case RuleKind::MinimalWeaklyStableSet:
      return make_choice_outcome("weakly_stable", names, minimal_weakly_stable_set(g));
    default: throw Error(ErrorCode::UnknownRule, rule_id(rule) + " is not a majority-relation rule");
  }
}

std::string to_dot(const MajorityGraph& g) {
  std::ostringstream os;
  os << "digraph majority {\n";
  for (const auto& s : g.systems()) os << "  \"" << s << "\";\n";
  for (const auto& e : g.edges()) {
    os << "  \"" << g.systems()[e.from] << "\" -> \"" << g.systems()[e.to] << "\" [margin=" << e.margin
       << ", support=" << e.support << "];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace vnr
