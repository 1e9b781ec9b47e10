#include "vnr/rule.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <utility>

#include "vnr/errors.hpp"

namespace vnr {
namespace {

constexpr std::array<std::pair<RuleKind, std::string_view>, 26> kNames{{
    {RuleKind::Plurality, "plurality"},
    {RuleKind::TwoApproval, "two_approval"},
    {RuleKind::Antiplurality, "antiplurality"},
    {RuleKind::Borda, "borda"},
    {RuleKind::Dowdall, "dowdall"},
    {RuleKind::Threshold, "threshold"},
    {RuleKind::Baldwin, "baldwin"},
    {RuleKind::Hare, "hare"},
    {RuleKind::Coombs, "coombs"},
    {RuleKind::Nanson, "nanson"},
    {RuleKind::Black, "black"},
    {RuleKind::Condorcet, "condorcet"},
    {RuleKind::CopelandI, "copeland"},
    {RuleKind::CopelandII, "copeland_ii"},
    {RuleKind::CopelandIII, "copeland_iii"},
    {RuleKind::Minimax, "minimax"},
    {RuleKind::MinimalDominantSet, "minimal_dominant"},
    {RuleKind::MinimalUndominatedSet, "minimal_undominated"},
    {RuleKind::UncoveredSetI, "uncovered_i"},
    {RuleKind::UncoveredSetII, "uncovered_ii"},
    {RuleKind::Richelson, "richelson"},
    {RuleKind::Fishburn, "fishburn"},
    {RuleKind::MinimalWeaklyStableSet, "weakly_stable"},
    {RuleKind::ArithmeticMean, "am"},
    {RuleKind::GeometricMean, "gm"},
    {RuleKind::OptimalityGap, "og"},
}};

double parse_number(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
    throw Error(ErrorCode::UnknownRule, "bad number '" + std::string(text) + "' in rule id");
  }
  return value;
}

std::string format_number(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

}  // namespace

Rule parse_rule(std::string_view id) {
  if (id.starts_with("custom:")) {
    Rule r{RuleKind::CustomVector, {}, 0.95};
    std::string_view rest = id.substr(7);
    while (!rest.empty()) {
      auto comma = rest.find(',');
      r.vector.push_back(parse_number(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    if (r.vector.empty()) throw Error(ErrorCode::UnknownRule, "custom vector is empty");
    return r;
  }
  if (id.starts_with("og:")) {
    return Rule{RuleKind::OptimalityGap, {}, parse_number(id.substr(3))};
  }
  // Accept a few spellings used in reports.
  if (id == "2-approval" || id == "two-approval") return Rule{RuleKind::TwoApproval, {}, 0.95};
  if (id == "copeland_i") return Rule{RuleKind::CopelandI, {}, 0.95};
  if (id == "mean") return Rule{RuleKind::ArithmeticMean, {}, 0.95};
  if (id == "gmean") return Rule{RuleKind::GeometricMean, {}, 0.95};
  for (const auto& [kind, name] : kNames) {
    if (name == id) return Rule{kind, {}, 0.95};
  }
  throw Error(ErrorCode::UnknownRule, "'" + std::string(id) + "'");
}

std::string rule_id(const Rule& rule) {
  if (rule.kind == RuleKind::CustomVector) {
    std::string out = "custom:";
    for (std::size_t i = 0; i < rule.vector.size(); ++i) {
      if (i) out += ',';
      out += format_number(rule.vector[i]);
    }
    return out;
  }
  if (rule.kind == RuleKind::OptimalityGap && rule.gamma != 0.95) return "og:" + format_number(rule.gamma);
  for (const auto& [kind, name] : kNames) {
    if (kind == rule.kind) return std::string(name);
  }
  return "unknown";
}

std::vector<std::string> registered_rule_ids() {
  std::vector<std::string> ids;
  for (const auto& entry : kNames) ids.emplace_back(entry.second);
  return ids;
}

RuleFamily family(RuleKind kind) noexcept {
  switch (kind) {
    case RuleKind::Plurality:
    case RuleKind::TwoApproval:
    case RuleKind::Antiplurality:
    case RuleKind::Borda:
    case RuleKind::Dowdall:
    case RuleKind::CustomVector: return RuleFamily::Scoring;
    case RuleKind::Threshold:
    case RuleKind::Baldwin:
    case RuleKind::Hare:
    case RuleKind::Coombs:
    case RuleKind::Nanson:
    case RuleKind::Black: return RuleFamily::Iterative;
    case RuleKind::ArithmeticMean:
    case RuleKind::GeometricMean:
    case RuleKind::OptimalityGap: return RuleFamily::Baseline;
    default: return RuleFamily::Majority;
  }
}

bool is_choice_rule(RuleKind kind) noexcept {
  switch (kind) {
    case RuleKind::Condorcet:
    case RuleKind::MinimalDominantSet:
    case RuleKind::MinimalUndominatedSet:
    case RuleKind::UncoveredSetI:
    case RuleKind::UncoveredSetII:
    case RuleKind::Richelson:
    case RuleKind::Fishburn:
    case RuleKind::MinimalWeaklyStableSet: return true;
    default: return false;
  }
}

bool accepts_missing(RuleKind kind) noexcept { return family(kind) == RuleFamily::Majority; }

}  // namespace vnr
