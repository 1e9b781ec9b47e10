#include "vnr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "vnr/errors.hpp"

namespace vnr {
namespace {

using Preorder = std::vector<std::vector<std::string>>;

std::vector<std::set<std::string>> as_sets(const Preorder& p) {
  std::vector<std::set<std::string>> out;
  for (const auto& g : p) out.emplace_back(g.begin(), g.end());
  return out;
}

// Group index of every system in a's preorder and b's, over a common order of names.
struct Paired {
  std::vector<std::string> names;
  std::vector<double> x;  // fractional positions in a
  std::vector<double> y;
  std::vector<std::size_t> gx;  // group index in a
  std::vector<std::size_t> gy;
  bool identical = false;
  bool degenerate = false;
};

std::map<std::string, std::pair<std::size_t, double>> positions(const Preorder& p) {
  std::map<std::string, std::pair<std::size_t, double>> out;
  std::size_t before = 0;
  for (std::size_t g = 0; g < p.size(); ++g) {
    const double pos = static_cast<double>(before) + (static_cast<double>(p[g].size()) + 1.0) / 2.0;
    for (const auto& s : p[g]) out[s] = {g, pos};
    before += p[g].size();
  }
  return out;
}

Paired pair_up(const RuleOutcome& a, const RuleOutcome& b) {
  const Preorder pa = total_preorder(a);
  const Preorder pb = total_preorder(b);
  const auto ma = positions(pa);
  const auto mb = positions(pb);
  if (ma.size() != mb.size()) throw Error(ErrorCode::MismatchedSystems, "outcomes rank different system sets");
  Paired out;
  for (const auto& [name, ga] : ma) {
    const auto it = mb.find(name);
    if (it == mb.end()) throw Error(ErrorCode::MismatchedSystems, "system '" + name + "' appears in only one outcome");
    out.names.push_back(name);
    out.gx.push_back(ga.first);
    out.x.push_back(ga.second);
    out.gy.push_back(it->second.first);
    out.y.push_back(it->second.second);
  }
  out.identical = as_sets(pa) == as_sets(pb);
  out.degenerate = pa.size() <= 1 || pb.size() <= 1;
  return out;
}

}  // namespace

std::vector<std::string> end_set(const RuleOutcome& r, std::size_t k, End end) {
  Preorder p = total_preorder(r);
  if (end == End::Least) std::reverse(p.begin(), p.end());
  std::vector<std::string> out;
  for (const auto& g : p) {
    if (out.size() >= k) break;
    out.insert(out.end(), g.begin(), g.end());
  }
  return out;
}

double agreement_rate(const RuleOutcome& a, const RuleOutcome& b, std::size_t k, End end) {
  const Paired p = pair_up(a, b);
  if (k == 0 || k > p.names.size()) throw Error(ErrorCode::InvalidArgument, "k must lie in [1, number of systems]");
  auto sa = end_set(a, k, end);
  auto sb = end_set(b, k, end);
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  std::vector<std::string> common;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
  return static_cast<double>(common.size()) / static_cast<double>(std::max(sa.size(), sb.size()));
}

double kendall_tau(const RuleOutcome& a, const RuleOutcome& b) {
  const Paired p = pair_up(a, b);
  if (p.identical) return 1.0;
  if (p.degenerate) return 0.0;
  long long concordant = 0, discordant = 0, tie_x = 0, tie_y = 0, pairs = 0;
  const std::size_t n = p.names.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      ++pairs;
      const int dx = (p.gx[i] < p.gx[j]) - (p.gx[i] > p.gx[j]);
      const int dy = (p.gy[i] < p.gy[j]) - (p.gy[i] > p.gy[j]);
      if (dx == 0) ++tie_x;
      if (dy == 0) ++tie_y;
      if (dx * dy > 0) ++concordant;
      if (dx * dy < 0) ++discordant;
    }
  }
  const double denom = std::sqrt(static_cast<double>(pairs - tie_x) * static_cast<double>(pairs - tie_y));
  return static_cast<double>(concordant - discordant) / denom;
}

double spearman_rho(const RuleOutcome& a, const RuleOutcome& b) {
  const Paired p = pair_up(a, b);
  if (p.identical) return 1.0;
  if (p.degenerate) return 0.0;
  const double n = static_cast<double>(p.names.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    mx += p.x[i];
    my += p.y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < p.x.size(); ++i) {
    sxy += (p.x[i] - mx) * (p.y[i] - my);
    sxx += (p.x[i] - mx) * (p.x[i] - mx);
    syy += (p.y[i] - my) * (p.y[i] - my);
  }
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::size_t discriminative_power(const RuleOutcome& r) {
  const Preorder p = total_preorder(r);
  std::size_t n = 0;
  for (const auto& g : p) n += g.size();
  return n - p.size();
}

RuleOutcome restrict_outcome(const RuleOutcome& r, std::span<const std::string> keep) {
  const std::set<std::string> wanted(keep.begin(), keep.end());
  RuleOutcome out;
  out.rule_id = r.rule_id;
  out.mode = r.mode;
  for (const auto& g : total_preorder(r)) {
    std::vector<std::string> kept;
    for (const auto& s : g) {
      if (!wanted.count(s)) continue;
      kept.push_back(s);
      if (const auto sc = r.score_of(s)) out.scores[s] = *sc;
    }
    if (!kept.empty()) out.ranking.push_back(std::move(kept));
  }
  return out;
}

}  // namespace vnr
