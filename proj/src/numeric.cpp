#include "vnr/numeric.hpp"

namespace vnr {

std::vector<std::vector<std::size_t>> group_by_score(std::span<const std::size_t> items, std::span<const double> scores,
                                                     bool higher_is_better) {
  std::vector<std::size_t> order(items.begin(), items.end());
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return higher_is_better ? scores[a] > scores[b] : scores[a] < scores[b];
  });

  double scale = 0.0;
  for (std::size_t i : order) scale = std::max(scale, std::abs(scores[i]));

  std::vector<std::vector<std::size_t>> groups;
  for (std::size_t i : order) {
    if (groups.empty() || !tied(scores[groups.back().front()], scores[i], scale)) {
      groups.push_back({i});
    } else {
      groups.back().push_back(i);
    }
  }
  // Restore input order inside each group.
  for (auto& g : groups) {
    std::stable_sort(g.begin(), g.end(), [&](std::size_t a, std::size_t b) {
      return std::find(items.begin(), items.end(), a) < std::find(items.begin(), items.end(), b);
    });
  }
  return groups;
}

std::vector<double> fractional_positions(std::span<const double> values) {
  std::vector<double> pos(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::size_t better = 0;
    std::size_t equal = 0;
    for (double v : values) {
      if (v > values[i]) ++better;
      else if (v == values[i]) ++equal;
    }
    pos[i] = 1.0 + static_cast<double>(better) + static_cast<double>(equal - 1) / 2.0;
  }
  return pos;
}

}  // namespace vnr
