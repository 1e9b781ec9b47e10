#include "vnr/scoring_rules.hpp"

#include <cmath>
#include <numeric>

#include "vnr/errors.hpp"
#include "vnr/numeric.hpp"

namespace vnr {

ScoringVector::ScoringVector(std::vector<double> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) throw Error(ErrorCode::InvalidScoringVector, "empty scoring vector");
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (!std::isfinite(entries_[i])) throw Error(ErrorCode::InvalidScoringVector, "non-finite entry");
    if (i > 0 && entries_[i] > entries_[i - 1]) {
      throw Error(ErrorCode::InvalidScoringVector, "entries must be non-increasing");
    }
  }
  if (entries_.size() >= 2 && entries_.front() == entries_.back()) {
    throw Error(ErrorCode::InvalidScoringVector, "entries must not all be equal");
  }
}

ScoringVector ScoringVector::plurality(std::size_t n) { return top_k(n, 1); }

ScoringVector ScoringVector::two_approval(std::size_t n) { return top_k(n, 2); }

ScoringVector ScoringVector::antiplurality(std::size_t n) { return top_k(n, n == 0 ? 0 : n - 1); }

ScoringVector ScoringVector::borda(std::size_t n) {
  std::vector<double> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = static_cast<double>(n - 1 - i);
  return ScoringVector(Unchecked{}, std::move(c));
}

ScoringVector ScoringVector::dowdall(std::size_t n) {
  std::vector<double> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = 1.0 / static_cast<double>(i + 1);
  return ScoringVector(Unchecked{}, std::move(c));
}

ScoringVector ScoringVector::top_k(std::size_t n, std::size_t ones) {
  std::vector<double> c(n, 0.0);
  for (std::size_t i = 0; i < std::min(n, ones); ++i) c[i] = 1.0;
  if (n == 1) c[0] = 1.0;
  return ScoringVector(Unchecked{}, std::move(c));
}

ScoringVector ScoringVector::for_rule(const Rule& rule, std::size_t n) {
  switch (rule.kind) {
    case RuleKind::Plurality: return plurality(n);
    case RuleKind::TwoApproval: return two_approval(n);
    case RuleKind::Antiplurality: return antiplurality(n);
    case RuleKind::Borda: return borda(n);
    case RuleKind::Dowdall: return dowdall(n);
    case RuleKind::CustomVector: {
      ScoringVector c(rule.vector);
      if (c.size() != n) {
        throw Error(ErrorCode::VectorLengthMismatch, "custom vector has " + std::to_string(c.size()) +
                                                         " entries for " + std::to_string(n) + " systems");
      }
      return c;
    }
    default: throw Error(ErrorCode::UnknownRule, rule_id(rule) + " is not a scoring rule");
  }
}

double ScoringVector::sum() const noexcept { return std::accumulate(entries_.begin(), entries_.end(), 0.0); }

std::vector<double> score_with_vector(const RankProfile& profile, const ScoringVector& c) {
  return score_with_vector(profile, c, profile.weights());
}

std::vector<double> score_with_vector(const RankProfile& profile, const ScoringVector& c,
                                      std::span<const double> weights) {
  profile.require_complete();
  const std::size_t n = profile.num_systems();
  if (c.size() != n) {
    throw Error(ErrorCode::VectorLengthMismatch,
                "vector has " + std::to_string(c.size()) + " entries for " + std::to_string(n) + " systems");
  }
  if (weights.size() != profile.num_voters()) throw Error(ErrorCode::InvalidArgument, "weights/voters length mismatch");

  std::vector<double> totals(n, 0.0);
  for (std::size_t v = 0; v < profile.num_voters(); ++v) {
    for (std::size_t s = 0; s < n; ++s) {
      const std::size_t span = profile.tie_size(v, s);
      const double first = *profile.position(v, s) - static_cast<double>(span - 1) / 2.0;
      const auto start = static_cast<std::size_t>(first + 0.5) - 1;
      double points = 0.0;
      for (std::size_t k = 0; k < span; ++k) points += c[start + k];
      totals[s] += weights[v] * points / static_cast<double>(span);
    }
  }
  return totals;
}

RuleOutcome apply_scoring_rule(const RankProfile& profile, const ScoringVector& c, std::string rule_id) {
  const auto scores = score_with_vector(profile, c);
  std::vector<std::size_t> all(profile.num_systems());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return make_outcome(std::move(rule_id), profile.systems(), group_by_score(all, scores, true), scores);
}

RuleOutcome apply_scoring_rule(const RankProfile& profile, const Rule& rule) {
  return apply_scoring_rule(profile, ScoringVector::for_rule(rule, profile.num_systems()), rule_id(rule));
}

}  // namespace vnr
