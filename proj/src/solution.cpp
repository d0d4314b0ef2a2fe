#include "tcgre/solution.hpp"

#include <cstdlib>
#include <string>

namespace tcgre {

SolutionCheck validate_solution(const ProblemInstance& inst, const Solution& sol) {
  SolutionCheck check;
  auto fail = [&](std::string rule, std::string detail) {
    check.violations.push_back({std::move(rule), std::move(detail)});
  };

  const int robots = inst.robot_count();
  if (static_cast<int>(sol.paths.size()) != robots) {
    fail("paths_per_robot", "solution has " + std::to_string(sol.paths.size()) +
                                " paths for " + std::to_string(robots) + " robots");
    return check;
  }
  if (robots == 0) return check;

  const size_t length = sol.paths[0].size();
  if (length == 0) {
    fail("path_nonempty", "paths must contain at least the start configuration");
    return check;
  }
  for (RobotId n = 0; n < robots; ++n) {
    if (sol.paths[n].size() != length) {
      fail("paths_equal_length", "robot " + std::to_string(n) + " path length differs");
      return check;
    }
    if (sol.paths[n].front() != inst.starts[n]) {
      fail("path_starts_at_start", "robot " + std::to_string(n) + " does not start at " +
                                       std::to_string(inst.starts[n]));
    }
    if (sol.paths[n].back() != inst.goals[n]) {
      fail("path_ends_at_goal", "robot " + std::to_string(n) + " does not end at " +
                                    std::to_string(inst.goals[n]));
    }
  }

  // Group events by step; reject out-of-range or unordered steps.
  const int steps = static_cast<int>(length) - 1;
  std::vector<std::vector<CoordinationTriple>> per_step(steps);
  std::vector<std::vector<NodeId>> claimed_support(steps);
  int prev_step = -1;
  for (const SolutionEvent& ev : sol.events) {
    if (ev.step < 0 || ev.step >= steps) {
      fail("event_step_range", "event step " + std::to_string(ev.step) + " out of range");
      continue;
    }
    if (ev.step < prev_step) {
      fail("events_time_ordered", "events are not sorted by step");
    }
    prev_step = ev.step;
    per_step[ev.step].push_back({ev.receiver, ev.supporter, ev.edge_u, ev.edge_v});
    claimed_support[ev.step].push_back(ev.support_node);
  }

  Cost total = 0;
  JointState from, to;
  for (int t = 0; t < steps; ++t) {
    from.locations.clear();
    to.locations.clear();
    for (RobotId n = 0; n < robots; ++n) {
      from.locations.push_back(sol.paths[n][t]);
      to.locations.push_back(sol.paths[n][t + 1]);
    }
    auto step_violations = check_transition(inst, from, to, per_step[t]);
    if (!step_violations.empty()) {
      for (Violation& v : step_violations) {
        v.detail = "step " + std::to_string(t) + ": " + v.detail;
        check.violations.push_back(std::move(v));
      }
      continue;
    }
    for (size_t k = 0; k < per_step[t].size(); ++k) {
      const CoordinationTriple& c = per_step[t][k];
      if (claimed_support[t][k] != from.locations[c.supporter]) {
        fail("event_support_node",
             "step " + std::to_string(t) + ": event claims support node " +
                 std::to_string(claimed_support[t][k]) + " but supporter sits at " +
                 std::to_string(from.locations[c.supporter]));
      }
    }
    total += transition_step_costs(inst, from, to, per_step[t]).total;
  }
  check.recomputed_total = total;

  if (check.violations.empty()) {
    Cost claimed_sum = 0;
    for (Cost c : sol.per_robot_cost) claimed_sum += c;
    if (sol.per_robot_cost.size() != static_cast<size_t>(robots)) {
      fail("per_robot_cost_arity", "per_robot_cost must list every robot");
    } else if (std::llabs(claimed_sum - sol.total_cost) > 1) {
      fail("total_is_sum", "total_cost differs from sum of per_robot_cost");
    }
    if (std::llabs(total - sol.total_cost) > 1) {
      fail("cost_mismatch", "recomputed total " + cost_to_string(total) +
                                " differs from claimed " + cost_to_string(sol.total_cost));
    }
  }
  return check;
}

}  // namespace tcgre
