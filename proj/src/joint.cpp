#include "tcgre/joint.hpp"

#include <algorithm>
#include <sstream>

namespace tcgre {

namespace {

std::string robot_str(RobotId n) { return "robot " + std::to_string(n); }

}  // namespace

std::vector<Violation> check_transition(const ProblemInstance& inst,
                                        const JointState& from, const JointState& to,
                                        const std::vector<CoordinationTriple>& coordination) {
  std::vector<Violation> out;
  const Graph& g = inst.graph;
  const int robots = inst.robot_count();

  if (static_cast<int>(from.locations.size()) != robots ||
      static_cast<int>(to.locations.size()) != robots) {
    out.push_back({"transition_arity", "joint states must list every robot"});
    return out;
  }

  bool any_moves = false;
  for (RobotId n = 0; n < robots; ++n) {
    const NodeId a = from.locations[n];
    const NodeId b = to.locations[n];
    if (a < 0 || a >= g.node_count() || b < 0 || b >= g.node_count()) {
      out.push_back({"location_range", robot_str(n) + " location out of range"});
      continue;
    }
    if (a == b) continue;
    any_moves = true;
    if (g.edge_index(a, b) < 0) {
      out.push_back({"move_adjacency", robot_str(n) + " moves " + std::to_string(a) +
                                           "->" + std::to_string(b) +
                                           " along a non-edge"});
    }
  }

  if (!any_moves) {
    bool all_at_goal = true;
    for (RobotId n = 0; n < robots; ++n) {
      if (n >= static_cast<int>(inst.goals.size()) ||
          from.locations[n] != inst.goals[n]) {
        all_at_goal = false;
        break;
      }
    }
    if (!all_at_goal) {
      out.push_back({"no_all_stay", "all robots stay while some robot is off-goal"});
    }
  }

  std::vector<int> roles(robots, 0);  // 0 free, 1 receiver, 2 supporter
  for (const CoordinationTriple& c : coordination) {
    if (c.receiver < 0 || c.receiver >= robots || c.supporter < 0 ||
        c.supporter >= robots) {
      out.push_back({"coordination_robot_range", "coordination names unknown robot"});
      continue;
    }
    if (c.receiver == c.supporter) {
      out.push_back({"no_self_support", robot_str(c.receiver) + " supports itself"});
      continue;
    }
    if (roles[c.receiver] != 0) {
      out.push_back({"one_coordination_per_robot",
                     robot_str(c.receiver) + " appears in two coordination triples"});
    }
    if (roles[c.supporter] != 0) {
      out.push_back({"one_coordination_per_robot",
                     robot_str(c.supporter) + " appears in two coordination triples"});
    }
    roles[c.receiver] = 1;
    roles[c.supporter] = 2;

    const int idx = g.edge_index(c.edge_u, c.edge_v);
    if (idx < 0 || !g.is_risky(idx)) {
      out.push_back({"coordination_edge_risky",
                     "coordination on non-risky or unknown edge " +
                         std::to_string(c.edge_u) + "-" + std::to_string(c.edge_v)});
      continue;
    }
    if (from.locations[c.receiver] != c.edge_u || to.locations[c.receiver] != c.edge_v) {
      out.push_back({"receiver_crosses_edge",
                     robot_str(c.receiver) + " does not cross " +
                         std::to_string(c.edge_u) + "->" + std::to_string(c.edge_v) +
                         " this step"});
    }
    const NodeId s_loc = from.locations[c.supporter];
    if (to.locations[c.supporter] != s_loc) {
      out.push_back({"supporter_stays", robot_str(c.supporter) + " moves while supporting"});
    }
    const RiskyInfo* info = g.risky(idx);
    if (info && std::find(info->support_nodes.begin(), info->support_nodes.end(), s_loc) ==
                    info->support_nodes.end()) {
      out.push_back({"supporter_on_support_node",
                     robot_str(c.supporter) + " supports from node " +
                         std::to_string(s_loc) + " which is not a support node"});
    }
  }
  return out;
}

StepCosts transition_step_costs(const ProblemInstance& inst, const JointState& from,
                                const JointState& to,
                                const std::vector<CoordinationTriple>& coordination) {
  const Graph& g = inst.graph;
  // Width comes from the states, not the instance: the receding-horizon solver
  // applies this to two-robot sub-states of larger instances.
  const int robots = static_cast<int>(from.locations.size());
  StepCosts costs;
  costs.per_robot.assign(robots, 0);

  std::vector<char> supported(robots, 0);
  for (const CoordinationTriple& c : coordination) supported[c.receiver] = 1;

  for (RobotId n = 0; n < robots; ++n) {
    const NodeId a = from.locations[n];
    const NodeId b = to.locations[n];
    if (a == b) continue;  // stayers and supporters pay nothing
    const int idx = g.edge_index(a, b);
    costs.per_robot[n] = supported[n] ? inst.supported_cost(idx) : g.base_cost(idx);
    costs.total += costs.per_robot[n];
  }
  return costs;
}

Cost transition_cost(const ProblemInstance& inst, const JointTransition& tr) {
  const auto violations = check_transition(inst, tr.from, tr.to, tr.coordination);
  if (!violations.empty()) {
    std::ostringstream os;
    os << "invalid transition:";
    for (const Violation& v : violations) os << " [" << v.rule << "] " << v.detail << ";";
    throw ValidationError(os.str());
  }
  return transition_step_costs(inst, tr.from, tr.to, tr.coordination).total;
}

}  // namespace tcgre
