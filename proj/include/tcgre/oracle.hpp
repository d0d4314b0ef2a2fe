#pragma once

#include "tcgre/instance.hpp"
#include "tcgre/solution.hpp"

namespace tcgre {

// Guard rails for the exhaustive search; it refuses anything bigger.
struct OracleLimits {
  int max_nodes = 6;
  int max_robots = 3;
  int max_steps = 0;  // 0 -> instance horizon if present, else 2 * node_count
};

struct OracleResult {
  bool feasible = false;  // false when no plan reaches the goals within T
  Solution solution;
  Cost cost = kInfiniteCost;
};

// Ground-truth optimum by exhaustive depth-limited enumeration over
// time-expanded joint plans. Coordination options are enumerated directly
// from the constraint definitions (receiver/supporter/stay roles per robot),
// not via the matching reformulation the search solvers use, and costs follow
// the original accounting (receiver pays the reduced cost, supporter pays the
// coordination cost). Branch-and-bound against the incumbent keeps it exact.
OracleResult oracle_solve(const ProblemInstance& inst, const OracleLimits& limits = {},
                          const SolveLimits& solve_limits = {});

}  // namespace tcgre
