#pragma once

#include <vector>

#include "tcgre/instance.hpp"
#include "tcgre/routing.hpp"
#include "tcgre/solution.hpp"

namespace tcgre {

// One enumerable coordination unit: a risky edge together with one of its
// support nodes. Stored undirected (u < v); traversal direction is a separate
// enumeration axis.
struct SupportPair {
  NodeId edge_u = -1;
  NodeId edge_v = -1;
  NodeId support_node = -1;

  bool operator==(const SupportPair& other) const {
    return edge_u == other.edge_u && edge_v == other.edge_v &&
           support_node == other.support_node;
  }
};

// Waypoint list entry: either cross a risky edge (receiver role, from -> to)
// or hold a support node (supporter role). event_id ties the receiver and
// supporter sides of one coordination together and fixes the global order.
struct IcsItem {
  enum class Kind { cross_risky_edge, hold_support_node };
  Kind kind = Kind::cross_risky_edge;
  int event_id = -1;
  NodeId from = -1;  // cross: tail; hold: the support node
  NodeId to = -1;    // cross: head; hold: unused
};

struct IndividualCoordinationSet {
  // per_robot[n] lists robot n's waypoints in visit order (event ids must be
  // strictly increasing within one robot). An empty list keeps the robot on
  // its individual shortest path.
  std::vector<std::vector<IcsItem>> per_robot;
};

struct EnumerationCounters {
  std::uint64_t subsets_visited = 0;      // includes the empty subset
  std::uint64_t permutations_visited = 0; // nonempty subsets only
  std::uint64_t assignments_visited = 0;  // direction x robot-pair combinations
  std::uint64_t cost_calculations = 0;
};

// All (risky edge, support node) combinations, in deterministic order.
std::vector<SupportPair> build_coordination_set(const ProblemInstance& inst);

struct CostCalcOutcome {
  bool feasible = false;  // false: some waypoint unreachable
  bool aborted = false;   // true: partial cost reached the prune bound
  Solution solution;
  Cost cost = kInfiniteCost;
};

// Chains pessimistic shortest-path segments through the waypoints, paying the
// supported cost on each crossed risky edge, then assembles a synchronized
// plan: supporters wait (free) until their receiver arrives, events happen in
// event_id order. `prune_bound` aborts early once the running total reaches it.
CostCalcOutcome cost_calculation(const ProblemInstance& inst,
                                 const IndividualCoordinationSet& ics,
                                 PathCache& pessimistic_cache,
                                 Cost prune_bound = kInfiniteCost);
CostCalcOutcome cost_calculation(const ProblemInstance& inst,
                                 const IndividualCoordinationSet& ics);

struct CesResult {
  Solution solution;
  Cost cost = kInfiniteCost;
  EnumerationCounters counters;
};

// Coordination-Exhaustive Search: minimum over the naive baseline and every
// (multiset of support pairs up to max_uses_per_pair each, permutation,
// traversal direction per element, ordered robot pair per element).
CesResult solve_ces(const ProblemInstance& inst, int max_uses_per_pair = 1,
                    const SolveLimits& limits = {});

}  // namespace tcgre
