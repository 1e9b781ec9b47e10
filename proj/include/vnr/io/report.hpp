#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "vnr/outcome.hpp"

namespace vnr::io {

/// { rule, mode, ranking: [{rank, systems, score}], scores, unranked,
///   diagnostics, seed }. `rank` is the competition rank of the group and
/// `score` the score of its first member, or null.
nlohmann::json to_json(const RuleOutcome& outcome, std::optional<std::uint64_t> seed = std::nullopt);
RuleOutcome outcome_from_json(const nlohmann::json& j);

/// One line per system; tied systems share a rank. With a baseline, a last
/// column shows the move relative to it: "↑2", "↓1" or "=".
std::string to_table(const RuleOutcome& outcome, const RuleOutcome* baseline = nullptr);

/// Shortest text that reads back as the same double.
std::string format_number(double v);
/// Up to 6 significant digits, for tables.
std::string format_short(double v);

/// Deterministic JSON text: sorted keys, two-space indent, trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace vnr::io
