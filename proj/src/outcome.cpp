#include "vnr/outcome.hpp"

#include <algorithm>

#include "vnr/errors.hpp"

namespace vnr {

std::string_view to_string(AggregationMode mode) noexcept {
  switch (mode) {
    case AggregationMode::Basic: return "basic";
    case AggregationMode::Weighted: return "weighted";
    case AggregationMode::TwoStep: return "two_step";
  }
  return "basic";
}

AggregationMode parse_mode(std::string_view text) {
  if (text == "basic") return AggregationMode::Basic;
  if (text == "weighted") return AggregationMode::Weighted;
  if (text == "two_step" || text == "two-step") return AggregationMode::TwoStep;
  throw Error(ErrorCode::InvalidArgument, "unknown aggregation mode '" + std::string(text) + "'");
}

std::optional<double> RuleOutcome::score_of(std::string_view system) const {
  auto it = scores.find(std::string(system));
  if (it == scores.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> RuleOutcome::systems() const {
  std::vector<std::string> all;
  for (const auto& g : ranking) all.insert(all.end(), g.begin(), g.end());
  all.insert(all.end(), unranked.begin(), unranked.end());
  return all;
}

std::vector<std::vector<std::string>> total_preorder(const RuleOutcome& outcome) {
  auto groups = outcome.ranking;
  if (!outcome.unranked.empty()) groups.push_back(outcome.unranked);
  return groups;
}

std::map<std::string, std::size_t> competition_ranks(const RuleOutcome& outcome) {
  std::map<std::string, std::size_t> ranks;
  std::size_t ahead = 0;
  for (const auto& group : total_preorder(outcome)) {
    for (const auto& s : group) ranks[s] = ahead + 1;
    ahead += group.size();
  }
  return ranks;
}

RuleOutcome make_outcome(std::string rule_id, std::span<const std::string> systems,
                         const std::vector<std::vector<std::size_t>>& groups, std::span<const double> scores) {
  RuleOutcome out;
  out.rule_id = std::move(rule_id);
  for (const auto& g : groups) {
    std::vector<std::string> names;
    for (std::size_t s : g) {
      names.push_back(systems[s]);
      if (!scores.empty()) out.scores[systems[s]] = scores[s];
    }
    out.ranking.push_back(std::move(names));
  }
  return out;
}

RuleOutcome make_choice_outcome(std::string rule_id, std::span<const std::string> systems,
                                const std::vector<std::size_t>& winners) {
  RuleOutcome out;
  out.rule_id = std::move(rule_id);
  std::vector<std::string> top;
  for (std::size_t s = 0; s < systems.size(); ++s) {
    if (std::find(winners.begin(), winners.end(), s) != winners.end()) {
      top.push_back(systems[s]);
    } else {
      out.unranked.push_back(systems[s]);
    }
  }
  if (!top.empty()) out.ranking.push_back(std::move(top));
  return out;
}

}  // namespace vnr
