#include "tcgre/matching.hpp"

#include <algorithm>

namespace tcgre {

namespace {

struct Search {
  const std::vector<std::vector<Cost>>& weight;
  int receivers;
  int supporters;
  std::vector<Cost> best_remaining;  // best_remaining[r]: max achievable from r on
  std::vector<char> used;
  std::vector<int> current;
  std::vector<int> best_assignment;
  Cost best = -1;

  explicit Search(const std::vector<std::vector<Cost>>& w)
      : weight(w),
        receivers(static_cast<int>(w.size())),
        supporters(w.empty() ? 0 : static_cast<int>(w[0].size())) {
    used.assign(supporters, 0);
    current.assign(receivers, -1);
    best_assignment = current;
    best_remaining.assign(receivers + 1, 0);
    for (int r = receivers - 1; r >= 0; --r) {
      Cost row_max = 0;
      for (int s = 0; s < supporters; ++s) row_max = std::max(row_max, weight[r][s]);
      best_remaining[r] = best_remaining[r + 1] + row_max;
    }
  }

  void run(int r, Cost acc) {
    if (acc + best_remaining[r] <= best) return;  // bound: cannot improve
    if (r == receivers) {
      best = acc;
      best_assignment = current;
      return;
    }
    for (int s = 0; s < supporters; ++s) {
      if (used[s] || weight[r][s] <= 0) continue;
      used[s] = 1;
      current[r] = s;
      run(r + 1, acc + weight[r][s]);
      current[r] = -1;
      used[s] = 0;
    }
    run(r + 1, acc);  // leave receiver r unmatched
  }
};

}  // namespace

AssignmentResult max_weight_assignment(const std::vector<std::vector<Cost>>& weight) {
  AssignmentResult result;
  if (weight.empty()) return result;
  Search search(weight);
  search.run(0, 0);
  result.total_weight = search.best;
  result.pair_of = search.best_assignment;
  return result;
}

}  // namespace tcgre
