#pragma once

#include <vector>

#include "tcgre/joint.hpp"

namespace tcgre {

struct SolutionEvent {
  int step = 0;  // 0-based index of the transition in which the crossing happens
  RobotId receiver = -1;
  RobotId supporter = -1;
  NodeId edge_u = -1;  // traversal direction: receiver moves edge_u -> edge_v
  NodeId edge_v = -1;
  NodeId support_node = -1;

  bool operator==(const SolutionEvent& other) const {
    return step == other.step && receiver == other.receiver &&
           supporter == other.supporter && edge_u == other.edge_u &&
           edge_v == other.edge_v && support_node == other.support_node;
  }
};

struct Solution {
  // paths[n][t] is robot n's node at time t; all rows share one length.
  std::vector<std::vector<NodeId>> paths;
  std::vector<SolutionEvent> events;  // time-ordered
  std::vector<Cost> per_robot_cost;
  Cost total_cost = 0;

  int step_count() const {
    return paths.empty() ? 0 : static_cast<int>(paths[0].size()) - 1;
  }

  bool operator==(const Solution& other) const {
    return paths == other.paths && events == other.events &&
           per_robot_cost == other.per_robot_cost && total_cost == other.total_cost;
  }
};

struct SolutionCheck {
  std::vector<Violation> violations;
  Cost recomputed_total = 0;

  bool ok() const { return violations.empty(); }
};

// Replays the plan step by step, checking every per-step constraint plus the
// start/goal/shape requirements, and recomputes the total cost independently
// of the claimed figure. A cost mismatch beyond one tick (1e-9) is a violation.
SolutionCheck validate_solution(const ProblemInstance& inst, const Solution& sol);

}  // namespace tcgre
