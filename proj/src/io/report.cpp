#include "vnr/io/report.hpp"

#include <algorithm>
#include <charconv>

#include "vnr/errors.hpp"

namespace vnr::io {

std::string format_number(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string format_short(double v) {
  if (v == 0.0) return "0";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 6);
  return std::string(buf, ptr);
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json to_json(const RuleOutcome& outcome, std::optional<std::uint64_t> seed) {
  nlohmann::json j;
  j["rule"] = outcome.rule_id;
  j["mode"] = std::string(to_string(outcome.mode));
  j["ranking"] = nlohmann::json::array();
  std::size_t rank = 1;
  for (const auto& group : outcome.ranking) {
    nlohmann::json g;
    g["rank"] = rank;
    g["systems"] = group;
    const auto s = group.empty() ? std::nullopt : outcome.score_of(group.front());
    g["score"] = s ? nlohmann::json(*s) : nlohmann::json(nullptr);
    j["ranking"].push_back(std::move(g));
    rank += group.size();
  }
  j["scores"] = nlohmann::json::object();
  for (const auto& [name, v] : outcome.scores) j["scores"][name] = v;
  j["unranked"] = outcome.unranked;
  j["diagnostics"] = outcome.diagnostics;
  j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  return j;
}

RuleOutcome outcome_from_json(const nlohmann::json& j) {
  try {
    RuleOutcome out;
    out.rule_id = j.at("rule").get<std::string>();
    out.mode = parse_mode(j.at("mode").get<std::string>());
    for (const auto& g : j.at("ranking")) out.ranking.push_back(g.at("systems").get<std::vector<std::string>>());
    if (j.contains("scores")) {
      for (const auto& [name, v] : j.at("scores").items()) out.scores[name] = v.get<double>();
    }
    if (j.contains("unranked")) out.unranked = j.at("unranked").get<std::vector<std::string>>();
    if (j.contains("diagnostics")) out.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed outcome: ") + e.what());
  }
}

std::string to_table(const RuleOutcome& outcome, const RuleOutcome* baseline) {
  struct Line {
    std::string rank, system, score, change;
  };
  std::vector<Line> lines;
  lines.push_back({"rank", "system", "score", baseline ? "vs " + baseline->rule_id : ""});
  const auto base_rank = baseline ? competition_ranks(*baseline) : std::map<std::string, std::size_t>{};
  auto change = [&](const std::string& s, std::size_t now) -> std::string {
    if (!baseline) return "";
    const auto it = base_rank.find(s);
    if (it == base_rank.end()) return "-";
    if (it->second > now) return "↑" + std::to_string(it->second - now);
    if (it->second < now) return "↓" + std::to_string(now - it->second);
    return "=";
  };

  std::size_t rank = 1;
  for (const auto& group : outcome.ranking) {
    for (const auto& s : group) {
      const auto sc = outcome.score_of(s);
      lines.push_back({std::to_string(rank), s, sc ? format_short(*sc) : "", change(s, rank)});
    }
    rank += group.size();
  }
  for (const auto& s : outcome.unranked) {
    const auto sc = outcome.score_of(s);
    lines.push_back({"-", s, sc ? format_short(*sc) : "", change(s, rank)});
  }

  std::size_t w0 = 0, w1 = 0, w2 = 0;
  for (const auto& l : lines) {
    w0 = std::max(w0, l.rank.size());
    w1 = std::max(w1, l.system.size());
    w2 = std::max(w2, l.score.size());
  }
  auto pad = [](std::string s, std::size_t w) { return s.append(w - std::min(w, s.size()), ' '); };
  std::string out;
  for (const auto& l : lines) {
    std::string row = pad(l.rank, w0) + "  " + pad(l.system, w1) + "  " + pad(l.score, w2);
    if (baseline) row += "  " + l.change;
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row + "\n";
  }
  if (outcome.ranking.empty()) out += "(no winner)\n";
  for (const auto& d : outcome.diagnostics) out += "# " + d + "\n";
  return out;
}

}  // namespace vnr::io
