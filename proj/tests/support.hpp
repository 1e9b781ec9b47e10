#pragma once

#include <set>
#include <string>
#include <vector>

#include "vnr/leaderboard.hpp"
#include "vnr/outcome.hpp"

namespace vnr::test {

// Four systems on five tasks; every task ranks the systems strictly.
inline Leaderboard toy() {
  return Leaderboard({"A", "B", "C", "D"}, {"T1", "T2", "T3", "T4", "T5"},
                     {{4, 4, 1, 1, 1}, {3, 1, 4, 3, 3}, {2, 3, 2, 4, 2}, {1, 2, 3, 2, 4}});
}

inline std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

inline std::vector<std::set<std::string>> groups(const RuleOutcome& r) {
  std::vector<std::set<std::string>> out;
  for (const auto& g : r.ranking) out.push_back(as_set(g));
  return out;
}

inline std::set<int> winner_indices(const RuleOutcome& r, const Leaderboard& lb) {
  std::set<int> out;
  for (const auto& w : r.winners()) out.insert(static_cast<int>(lb.system_index(w)));
  return out;
}

}  // namespace vnr::test
