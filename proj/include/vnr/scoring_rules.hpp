#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "vnr/outcome.hpp"
#include "vnr/profile.hpp"
#include "vnr/rule.hpp"

namespace vnr {

/// Points c_1 >= ... >= c_n awarded for places 1..n of one voter.
class ScoringVector {
 public:
  /// User-supplied vector: must be non-increasing and, for n >= 2, not constant.
  explicit ScoringVector(std::vector<double> entries);

  static ScoringVector plurality(std::size_t n);
  static ScoringVector two_approval(std::size_t n);
  static ScoringVector antiplurality(std::size_t n);
  static ScoringVector borda(std::size_t n);
  static ScoringVector dowdall(std::size_t n);
  /// `ones` leading ones followed by zeros; the vectors the threshold rule walks through.
  static ScoringVector top_k(std::size_t n, std::size_t ones);

  /// Named vector for a scoring RuleKind; CustomVector takes `rule.vector`.
  static ScoringVector for_rule(const Rule& rule, std::size_t n);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<double>& entries() const noexcept { return entries_; }
  double operator[](std::size_t i) const { return entries_[i]; }
  double sum() const noexcept;

 private:
  struct Unchecked {};
  ScoringVector(Unchecked, std::vector<double> entries) : entries_(std::move(entries)) {}

  std::vector<double> entries_;
};

/// Sc(m) = sum_i c_i p_i(m) with the profile's voter weights. A tie spanning
/// several places earns the mean of the spanned entries.
std::vector<double> score_with_vector(const RankProfile& profile, const ScoringVector& c);
/// Same with explicit per-voter weights.
std::vector<double> score_with_vector(const RankProfile& profile, const ScoringVector& c, std::span<const double> weights);

/// Ranks by descending total score; equal totals form one tie-group.
RuleOutcome apply_scoring_rule(const RankProfile& profile, const ScoringVector& c, std::string rule_id);
RuleOutcome apply_scoring_rule(const RankProfile& profile, const Rule& rule);

}  // namespace vnr
