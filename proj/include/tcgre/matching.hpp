#pragma once

#include <vector>

#include "tcgre/types.hpp"

namespace tcgre {

// Exact maximum-weight bipartite assignment between receivers and supporters.
// weight[r][s] <= 0 marks an ineligible pair; only positive-weight pairs are
// ever matched. Exhaustive for tiny inputs, branch-and-bound above; ties are
// broken by enumeration order (receivers ascending, lower supporter index
// first, then "leave unmatched"), which keeps results deterministic.
struct AssignmentResult {
  Cost total_weight = 0;
  // pair_of[r] = supporter index matched to receiver r, or -1.
  std::vector<int> pair_of;
};

AssignmentResult max_weight_assignment(const std::vector<std::vector<Cost>>& weight);

}  // namespace tcgre
