#pragma once

#include <vector>

#include "tcgre/instance.hpp"

namespace tcgre {

struct JointState {
  std::vector<NodeId> locations;  // one per robot

  bool operator==(const JointState& other) const { return locations == other.locations; }
  bool operator<(const JointState& other) const { return locations < other.locations; }
};

// One coordination behavior: `receiver` crosses the risky edge edge_u->edge_v
// (direction of traversal) while `supporter` holds a support node of that edge.
struct CoordinationTriple {
  RobotId receiver = -1;
  RobotId supporter = -1;
  NodeId edge_u = -1;
  NodeId edge_v = -1;

  bool operator==(const CoordinationTriple& other) const {
    return receiver == other.receiver && supporter == other.supporter &&
           edge_u == other.edge_u && edge_v == other.edge_v;
  }
};

// One synchronized team step. `cost` is whatever the producer computed; use
// transition_cost to derive it from the model.
struct JointTransition {
  JointState from;
  JointState to;
  std::vector<CoordinationTriple> coordination;
  Cost cost = 0;
};

// Constraint check for a single step. All-stay steps are rejected unless every
// robot already sits on its goal (terminal configuration exemption).
std::vector<Violation> check_transition(const ProblemInstance& inst,
                                        const JointState& from, const JointState& to,
                                        const std::vector<CoordinationTriple>& coordination);

struct StepCosts {
  std::vector<Cost> per_robot;
  Cost total = 0;
};

// Receiver-side accounting: supported receivers pay the effective supported
// cost, supporters and stayers pay zero, every other mover pays the base cost.
// Pre: the step passes check_transition.
StepCosts transition_step_costs(const ProblemInstance& inst, const JointState& from,
                                const JointState& to,
                                const std::vector<CoordinationTriple>& coordination);

// Throws ValidationError when the transition breaks any invariant.
Cost transition_cost(const ProblemInstance& inst, const JointTransition& tr);

}  // namespace tcgre
