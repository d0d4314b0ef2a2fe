#pragma once

#include <optional>
#include <vector>

#include "tcgre/instance.hpp"
#include "tcgre/solution.hpp"

namespace tcgre {

enum class PairingRule { index_order, nearest_support };

struct RhocConfig {
  int horizon = 3;  // K, joint steps planned per window
  PairingRule pairing = PairingRule::index_order;
  int step_cap = 0;  // outer-round limit; 0 -> 4 * node_count
};

struct RhocStats {
  std::uint64_t rounds = 0;
  std::uint64_t windows = 0;
  std::uint64_t overrides = 0;  // stagnating windows forced onto progress
  std::uint64_t states_expanded = 0;
};

// Joint positions of the window's robots after each committed step. May be
// empty: waiting out the window is a legal segment (the solver's stagnation
// guard deals with it).
struct WindowSegment {
  std::vector<std::vector<NodeId>> steps;
  Cost g = 0;            // exact cost of the committed steps
  Cost end_h = 0;        // heuristic at the segment end
  bool reached_goal = false;  // every window robot ends on its goal
};

using GoalDistances = std::vector<std::vector<Cost>>;  // [robot][node]

// Best segment of at most K joint steps for the two robots: exhaustive
// depth-bounded search over the pair's joint subgraph with exact pair
// transition costs, minimizing g(segment) + h(end). Optimistic ties are
// settled toward the end state with the cheapest support-free completion, so
// the pair never wanders after a route whose assumed support cannot appear.
WindowSegment plan_pair_window(const ProblemInstance& inst, RobotId robot_n,
                               RobotId robot_m, NodeId loc_n, NodeId loc_m, int horizon,
                               const GoalDistances& h);

// Same machinery for a lone robot: pessimistic edge costs inside the window,
// optimistic distances beyond it. A lone robot cannot stay in place mid-step
// (that would stagnate the whole team), so every committed step moves.
WindowSegment plan_solo_window(const ProblemInstance& inst, RobotId robot,
                               NodeId loc, int horizon, const GoalDistances& h);

struct RhocResult {
  Solution solution;
  RhocStats stats;
};

// Receding-horizon optimistic cooperative A*: per round, the on-duty robots
// are partitioned into disjoint pairs (plus one solo leftover when odd), each
// window commits its full segment, and a pair leaves duty only when both of
// its robots stand on their goals - until then a robot parked on its goal
// keeps serving as a potential supporter for its partner.
RhocResult solve_rhoc(const ProblemInstance& inst, const RhocConfig& cfg = {},
                      const SolveLimits& limits = {});

}  // namespace tcgre
