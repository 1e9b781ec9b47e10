#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vnr/leaderboard.hpp"
#include "vnr/outcome.hpp"
#include "vnr/profile.hpp"
#include "vnr/rule.hpp"

namespace vnr {

/// Weighted pairwise majority relation.
///
/// margin(a, b) = sum_i w_i R(a, b, i), where R is +1 / -1 when both systems
/// are ranked on voter i and a is above / below b, and 0 otherwise. An edge
/// a -> b exists iff margin(a, b) > 0 (up to the tie tolerance).
class MajorityGraph {
 public:
  struct Edge {
    std::size_t from;
    std::size_t to;
    double margin;
    double support;
  };

  /// Missing positions are skipped pair by pair; no imputation.
  static MajorityGraph from_profile(const RankProfile& profile);

  std::size_t size() const noexcept { return systems_.size(); }
  const std::vector<std::string>& systems() const noexcept { return systems_; }

  double margin(std::size_t a, std::size_t b) const { return margin_.at(a * size() + b); }
  /// Weight of voters ranking a strictly above b when a beats b, else 0.
  double support(std::size_t a, std::size_t b) const { return beats(a, b) ? above_.at(a * size() + b) : 0.0; }
  bool beats(std::size_t a, std::size_t b) const { return edge_.at(a * size() + b) != 0; }

  /// L(m): systems m beats.
  std::vector<std::size_t> lower(std::size_t m) const;
  /// U(m): systems beating m.
  std::vector<std::size_t> upper(std::size_t m) const;
  std::vector<Edge> edges() const;

 private:
  MajorityGraph() = default;

  std::vector<std::string> systems_;
  std::vector<double> margin_;
  std::vector<double> above_;
  std::vector<char> edge_;
};

/// Majority graph of a leaderboard, tolerating missing cells. `weights`
/// overrides the leaderboard's task weights when given.
MajorityGraph build_majority_graph(const Leaderboard& lb, const std::optional<std::vector<double>>& weights = std::nullopt);

/// The system beating every other one, if any.
std::optional<std::size_t> condorcet_winner(const MajorityGraph& g);
/// A system beaten by every other one, if any (requires at least 2 systems).
std::optional<std::size_t> condorcet_loser(const MajorityGraph& g);

enum class CopelandVariant { I, II, III };

/// I: |L| - |U| descending. II: |L| descending. III: |U| ascending.
RuleOutcome copeland(const MajorityGraph& g, CopelandVariant variant);
/// rank(m) = -(largest support among m's defeats), 0 when undefeated.
RuleOutcome minimax(const MajorityGraph& g);

// Choice rules. Each returns ascending system indices of the winning set.

/// Union of the inclusion-minimal sets whose members beat every outsider.
std::vector<std::size_t> minimal_dominant_set(const MajorityGraph& g);
/// Union of the inclusion-minimal sets no outsider beats any member of.
std::vector<std::size_t> minimal_undominated_set(const MajorityGraph& g);
enum class UncoveredVariant { I, II };
/// I: undominated under L(a) strictly containing L(b).
/// II: undominated under (a beats b and U(a) within U(b)).
std::vector<std::size_t> uncovered_set(const MajorityGraph& g, UncoveredVariant variant);
/// Undominated under L(a) containing L(b), U(a) within U(b), one inclusion strict.
std::vector<std::size_t> richelson(const MajorityGraph& g);
/// Undominated under U(a) strictly within U(b).
std::vector<std::size_t> fishburn(const MajorityGraph& g);
/// Union of the inclusion-minimal non-empty weakly stable sets. Supports up to
/// 64 systems.
std::vector<std::size_t> minimal_weakly_stable_set(const MajorityGraph& g);

/// Runs any majority-family rule on a (possibly incomplete) profile.
RuleOutcome apply_majority_rule(const RankProfile& profile, const Rule& rule);

/// Adjacency list with margins, one line per edge, for text export.
std::string to_dot(const MajorityGraph& g);

}  // namespace vnr
