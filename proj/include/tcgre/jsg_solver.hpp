#pragma once

#include <functional>
#include <vector>

#include "tcgre/joint.hpp"
#include "tcgre/solution.hpp"

namespace tcgre {

struct ExpansionStats {
  std::uint64_t states_generated = 0;  // distinct joint states materialized
  std::uint64_t states_expanded = 0;   // states whose successors were enumerated
  std::uint64_t matchings_solved = 0;
  std::uint64_t peak_frontier = 0;
};

struct MinTransition {
  Cost cost = 0;
  std::vector<CoordinationTriple> triples;
};

// Cheapest coordination assignment for one fixed joint move: maximum-weight
// matching between robots crossing risky edges and stationary robots parked on
// eligible support nodes, weight = base - supported cost (positive pairs only).
// Pre: every per-robot move is stay-or-adjacent.
MinTransition min_transition_cost(const ProblemInstance& inst, const JointState& from,
                                  const JointState& to);

// Every joint successor of `locs`: each robot stays or steps to a neighbor,
// the all-stay combination excluded (it would be a self-loop). The callback
// receives the successor and its minimum transition cost; returning false
// stops the enumeration. Works for any robot count, so the receding-horizon
// solver reuses it on two-robot sub-states.
using SuccessorFn = std::function<bool(const std::vector<NodeId>&, Cost)>;
void for_each_joint_successor(const ProblemInstance& inst,
                              const std::vector<NodeId>& locs, const SuccessorFn& fn,
                              ExpansionStats* stats = nullptr);

// Successors as full transitions, with minimum costs and witness assignments.
std::vector<JointTransition> expand(const ProblemInstance& inst, const JointState& s);

struct JsgResult {
  Solution solution;
  ExpansionStats stats;
};

// Observes every state the search settles (pops with its final g); used by
// verification harnesses to audit heuristic admissibility.
struct PopSample {
  std::vector<NodeId> locations;
  Cost g = 0;
  Cost h = 0;
};
using PopObserver = std::function<void(const PopSample&)>;

// Optimal solvers over the implicit joint state graph. A* uses the
// all-future-support heuristic h(L) = sum of per-robot optimistic distances;
// UCS is the h == 0 special case. Both share tie-breaking (lower f, then lower
// h, then lexicographically smallest joint state) and return identical costs.
JsgResult solve_ucs(const ProblemInstance& inst, const SolveLimits& limits = {},
                    const PopObserver& observer = {});
JsgResult solve_astar(const ProblemInstance& inst, const SolveLimits& limits = {},
                      const PopObserver& observer = {});

}  // namespace tcgre
