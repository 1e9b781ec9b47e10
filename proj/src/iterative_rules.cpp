#include "vnr/iterative_rules.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "vnr/errors.hpp"
#include "vnr/majority.hpp"
#include "vnr/numeric.hpp"
#include "vnr/scoring_rules.hpp"

namespace vnr {
namespace {

std::vector<std::size_t> iota_n(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return v;
}

std::vector<std::string> names_of(const RankProfile& p, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (std::size_t i : idx) out.push_back(p.systems()[i]);
  return out;
}

/// Outcome ranked as: `winners`, then `tail` groups in the given order.
RuleOutcome ordered_outcome(std::string id, const RankProfile& p, const std::vector<std::size_t>& winners,
                            const std::vector<std::vector<std::size_t>>& tail) {
  std::vector<std::vector<std::size_t>> groups{winners};
  groups.insert(groups.end(), tail.begin(), tail.end());
  for (auto& g : groups) std::sort(g.begin(), g.end());
  return make_outcome(std::move(id), p.systems(), groups);
}

struct Elimination {
  std::vector<std::size_t> winners;
  std::vector<std::vector<std::size_t>> eliminated;  // in elimination order
  EliminationTrace trace;
};

/// Scores survivors on the profile restricted to them.
using RoundScorer = std::function<std::pair<ScoringVector, std::vector<double>>(const RankProfile& sub)>;
/// Returns positions (into the survivor list) to eliminate; empty stops.
using RoundPicker = std::function<std::vector<std::size_t>(const std::vector<double>& scores, double total_weight)>;

Elimination run_elimination(const RankProfile& profile, const RoundScorer& scorer, const RoundPicker& picker) {
  Elimination run;
  std::vector<std::size_t> survivors = iota_n(profile.num_systems());
  while (survivors.size() > 1) {
    const RankProfile sub = profile.restrict_to(survivors);
    auto [vec, scores] = scorer(sub);
    const auto losers = picker(scores, profile.total_weight());

    EliminationRound round{names_of(profile, survivors), vec.entries(), scores, {}, {}};
    if (losers.empty() || losers.size() == survivors.size()) {
      round.note = losers.empty() ? "no system can be eliminated" : "all survivors tied";
      run.trace.rounds.push_back(std::move(round));
      break;
    }
    std::vector<std::size_t> dropped;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < survivors.size(); ++i) {
      if (std::find(losers.begin(), losers.end(), i) != losers.end()) {
        dropped.push_back(survivors[i]);
      } else {
        kept.push_back(survivors[i]);
      }
    }
    round.eliminated = names_of(profile, dropped);
    run.trace.rounds.push_back(std::move(round));
    run.eliminated.push_back(std::move(dropped));
    survivors = std::move(kept);
  }
  run.winners = survivors;
  run.trace.winners = names_of(profile, survivors);
  return run;
}

std::vector<std::size_t> minimum_scorers(const std::vector<double>& scores) {
  const double lo = *std::min_element(scores.begin(), scores.end());
  const double scale = magnitude(scores);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (tied(scores[i], lo, scale)) out.push_back(i);
  }
  return out;
}

IterativeResult finish(std::string id, const RankProfile& profile, Elimination run) {
  std::vector<std::vector<std::size_t>> tail(run.eliminated.rbegin(), run.eliminated.rend());
  IterativeResult result{ordered_outcome(std::move(id), profile, run.winners, tail), std::move(run.trace)};
  result.outcome.diagnostics = describe(result.trace);
  return result;
}

RoundScorer borda_scorer() {
  return [](const RankProfile& sub) {
    auto c = ScoringVector::borda(sub.num_systems());
    auto s = score_with_vector(sub, c);
    return std::make_pair(std::move(c), std::move(s));
  };
}

std::string format_number(double v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

IterativeResult threshold_rule(const RankProfile& profile) {
  profile.require_complete();
  const std::size_t n = profile.num_systems();

  // scores_by_ones[k] = totals under the vector with k leading ones, k = n-1 .. 1.
  std::vector<std::vector<double>> scores_by_ones(n);
  for (std::size_t k = n > 1 ? n - 1 : 0; k >= 1; --k) {
    scores_by_ones[k] = score_with_vector(profile, ScoringVector::top_k(n, k));
  }

  EliminationTrace trace;
  auto select = [&](std::vector<std::size_t> tied_set, bool record) {
    for (std::size_t k = n - 1; k >= 1 && tied_set.size() > 1; --k) {
      const auto& sc = scores_by_ones[k];
      std::vector<double> sub;
      for (std::size_t s : tied_set) sub.push_back(sc[s]);
      const double hi = *std::max_element(sub.begin(), sub.end());
      const double scale = magnitude(sub);
      std::vector<std::size_t> keep;
      std::vector<std::size_t> drop;
      for (std::size_t i = 0; i < tied_set.size(); ++i) {
        (tied(sub[i], hi, scale) ? keep : drop).push_back(tied_set[i]);
      }
      if (record) {
        trace.rounds.push_back(EliminationRound{names_of(profile, tied_set), ScoringVector::top_k(n, k).entries(), sub,
                                                names_of(profile, drop), {}});
      }
      tied_set = std::move(keep);
    }
    if (record && tied_set.size() > 1 && !trace.rounds.empty()) trace.rounds.back().note = "ties cannot be broken";
    return tied_set;
  };

  std::vector<std::size_t> remaining = iota_n(n);
  std::vector<std::vector<std::size_t>> groups;
  while (!remaining.empty()) {
    auto winners = select(remaining, groups.empty());
    std::vector<std::size_t> rest;
    for (std::size_t s : remaining) {
      if (std::find(winners.begin(), winners.end(), s) == winners.end()) rest.push_back(s);
    }
    groups.push_back(std::move(winners));
    remaining = std::move(rest);
  }
  trace.winners = names_of(profile, groups.front());

  // Reported scores are the first-round (antiplurality) totals.
  std::vector<double> first = n > 1 ? scores_by_ones[n - 1] : std::vector<double>{1.0};
  IterativeResult result{make_outcome("threshold", profile.systems(), groups, first), std::move(trace)};
  result.outcome.diagnostics = describe(result.trace);
  return result;
}

IterativeResult baldwin_rule(const RankProfile& profile) {
  profile.require_complete();
  auto run = run_elimination(profile, borda_scorer(), [](const std::vector<double>& scores, double) {
    return minimum_scorers(scores);
  });
  return finish("baldwin", profile, std::move(run));
}

IterativeResult hare_rule(const RankProfile& profile) {
  profile.require_complete();
  auto scorer = [](const RankProfile& sub) {
    auto c = ScoringVector::plurality(sub.num_systems());
    auto s = score_with_vector(sub, c);
    return std::make_pair(std::move(c), std::move(s));
  };
  auto run = run_elimination(profile, scorer, [](const std::vector<double>& scores, double) {
    return minimum_scorers(scores);
  });
  return finish("hare", profile, std::move(run));
}

IterativeResult nanson_rule(const RankProfile& profile) {
  profile.require_complete();
  auto run = run_elimination(profile, borda_scorer(), [](const std::vector<double>& scores, double) {
    const double mean = std::accumulate(scores.begin(), scores.end(), 0.0) / static_cast<double>(scores.size());
    const double scale = magnitude(scores);
    std::vector<std::size_t> below;
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (scores[i] < mean && !tied(scores[i], mean, scale)) below.push_back(i);
    }
    return below;
  });
  return finish("nanson", profile, std::move(run));
}

IterativeResult coombs_rule(const RankProfile& profile) {
  profile.require_complete();
  const double total = profile.total_weight();

  EliminationTrace trace;
  std::vector<std::vector<std::size_t>> eliminated;
  std::vector<std::size_t> survivors = iota_n(profile.num_systems());
  std::optional<std::size_t> majority_winner;
  while (survivors.size() > 1) {
    const RankProfile sub = profile.restrict_to(survivors);
    const std::size_t k = survivors.size();
    const auto firsts = score_with_vector(sub, ScoringVector::plurality(k));
    for (std::size_t i = 0; i < k; ++i) {
      if (firsts[i] > total / 2.0 && !tied(firsts[i], total / 2.0, total)) majority_winner = survivors[i];
    }
    if (majority_winner) {
      trace.rounds.push_back(EliminationRound{names_of(profile, survivors), ScoringVector::plurality(k).entries(), firsts, {},
                                              "majority of first places"});
      break;
    }
    // Last-place weight = total weight minus the antiplurality score.
    const auto anti = score_with_vector(sub, ScoringVector::antiplurality(k));
    std::vector<double> lasts(k);
    for (std::size_t i = 0; i < k; ++i) lasts[i] = total - anti[i];
    std::vector<double> neg(k);
    std::transform(lasts.begin(), lasts.end(), neg.begin(), [](double x) { return -x; });
    const auto losers = minimum_scorers(neg);

    EliminationRound round{names_of(profile, survivors), ScoringVector::antiplurality(k).entries(), lasts, {}, {}};
    if (losers.size() == k) {
      round.note = "all survivors tied";
      trace.rounds.push_back(std::move(round));
      break;
    }
    std::vector<std::size_t> dropped;
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < k; ++i) {
      (std::find(losers.begin(), losers.end(), i) != losers.end() ? dropped : kept).push_back(survivors[i]);
    }
    round.eliminated = names_of(profile, dropped);
    trace.rounds.push_back(std::move(round));
    eliminated.push_back(std::move(dropped));
    survivors = std::move(kept);
  }

  std::vector<std::vector<std::size_t>> groups;
  if (majority_winner) {
    groups.push_back({*majority_winner});
    std::vector<std::size_t> others;
    for (std::size_t s : survivors) {
      if (s != *majority_winner) others.push_back(s);
    }
    // Remaining survivors are ordered by running the rule among themselves.
    const RankProfile rest = profile.restrict_to(others);
    const auto sub = coombs_rule(rest).outcome;
    for (const auto& g : sub.ranking) {
      std::vector<std::size_t> idx;
      for (const auto& name : g) idx.push_back(profile.system_index(name));
      std::sort(idx.begin(), idx.end());
      groups.push_back(std::move(idx));
    }
  } else {
    groups.push_back(survivors);
  }
  for (auto it = eliminated.rbegin(); it != eliminated.rend(); ++it) {
    auto g = *it;
    std::sort(g.begin(), g.end());
    groups.push_back(std::move(g));
  }
  trace.winners = names_of(profile, groups.front());
  IterativeResult result{make_outcome("coombs", profile.systems(), groups), std::move(trace)};
  result.outcome.diagnostics = describe(result.trace);
  return result;
}

IterativeResult black_rule(const RankProfile& profile) {
  profile.require_complete();
  const auto borda = apply_scoring_rule(profile, ScoringVector::borda(profile.num_systems()), "black");
  const auto cw = condorcet_winner(MajorityGraph::from_profile(profile));

  IterativeResult result{borda, {}};
  if (!cw) {
    result.trace.rounds.push_back({profile.systems(), ScoringVector::borda(profile.num_systems()).entries(), {}, {},
                                   "no Condorcet winner; Borda ranking used"});
    result.trace.winners = borda.winners();
  } else {
    const std::string& name = profile.systems()[*cw];
    std::vector<std::vector<std::string>> ranking{{name}};
    for (auto group : borda.ranking) {
      std::erase(group, name);
      if (!group.empty()) ranking.push_back(std::move(group));
    }
    result.outcome.ranking = std::move(ranking);
    result.trace.rounds.push_back({profile.systems(), {}, {}, {}, "Condorcet winner " + name});
    result.trace.winners = {name};
  }
  result.outcome.diagnostics = describe(result.trace);
  return result;
}

IterativeResult apply_iterative_rule(const RankProfile& profile, const Rule& rule) {
  switch (rule.kind) {
    case RuleKind::Threshold: return threshold_rule(profile);
    case RuleKind::Baldwin: return baldwin_rule(profile);
    case RuleKind::Hare: return hare_rule(profile);
    case RuleKind::Coombs: return coombs_rule(profile);
    case RuleKind::Nanson: return nanson_rule(profile);
    case RuleKind::Black: return black_rule(profile);
    default: throw Error(ErrorCode::UnknownRule, rule_id(rule) + " is not an iterative rule");
  }
}

std::vector<std::string> describe(const EliminationTrace& trace) {
  std::vector<std::string> lines;
  for (std::size_t r = 0; r < trace.rounds.size(); ++r) {
    const auto& round = trace.rounds[r];
    std::ostringstream os;
    os << "round " << r + 1 << ":";
    if (!round.scores.empty()) {
      for (std::size_t i = 0; i < round.survivors.size(); ++i) {
        os << (i ? ", " : " ") << round.survivors[i] << "=" << format_number(round.scores[i]);
      }
    }
    if (!round.eliminated.empty()) {
      os << "; eliminated";
      for (const auto& e : round.eliminated) os << ' ' << e;
    }
    if (!round.note.empty()) os << (round.scores.empty() && round.eliminated.empty() ? " " : "; ") << round.note;
    lines.push_back(os.str());
  }
  std::ostringstream os;
  os << "winners:";
  for (const auto& w : trace.winners) os << ' ' << w;
  lines.push_back(os.str());
  return lines;
}

}  // namespace vnr
