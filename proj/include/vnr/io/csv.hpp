#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "vnr/leaderboard.hpp"

namespace vnr::io {

/// RFC 4180 records: comma separated, double-quoted fields may contain
/// commas, quotes ("") and newlines. Accepts LF and CRLF.
std::vector<std::vector<std::string>> parse_csv(std::string_view text);

/// Leaderboard file layout:
///
///   system,T1,T2,...
///   #direction,max,min,...   optional
///   #weight,1,0.5,...        optional
///   #group,g1,g1,,...        optional; empty cell = ungrouped
///   A,0.81,12,...
///
/// Empty or blank score cells are missing. NaN and infinities are rejected.
Leaderboard parse_leaderboard(std::string_view text);
Leaderboard read_leaderboard(const std::filesystem::path& path);
std::string format_leaderboard(const Leaderboard& lb);

/// Sidecar objects mapping task name to group name (or null) and to weight.
/// Tasks absent from the object fall back to ungrouped / weight 1.
Leaderboard apply_groups(const Leaderboard& lb, const nlohmann::json& groups);
Leaderboard apply_weights(const Leaderboard& lb, const nlohmann::json& weights);
nlohmann::json read_json_file(const std::filesystem::path& path);

/// Marks the named tasks as minimize-direction.
Leaderboard apply_minimize(const Leaderboard& lb, const std::vector<std::string>& tasks);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace vnr::io
