#include "tcgre/oracle.hpp"

#include <algorithm>
#include <unordered_map>

#include "tcgre/routing.hpp"

namespace tcgre {

namespace {

struct PlanStep {
  std::vector<NodeId> to;
  std::vector<CoordinationTriple> triples;
  std::vector<Cost> per_robot;
};

struct Enumerator {
  const ProblemInstance& inst;
  const SolveLimits& limits;
  int robots;
  int max_steps;
  std::uint64_t visit_budget_check = 0;

  Cost best = kInfiniteCost;
  std::vector<PlanStep> best_plan;
  bool found = false;

  std::vector<PlanStep> current;
  std::unordered_map<std::uint64_t, Cost> seen;  // (state, t) -> best prefix cost

  Enumerator(const ProblemInstance& pi, const SolveLimits& sl, int steps)
      : inst(pi), limits(sl), robots(pi.robot_count()), max_steps(steps) {}

  std::uint64_t state_key(const std::vector<NodeId>& locs, int t) const {
    std::uint64_t key = 0;
    for (NodeId l : locs) key = key * static_cast<std::uint64_t>(inst.graph.node_count()) +
                                static_cast<std::uint64_t>(l);
    return key * static_cast<std::uint64_t>(max_steps + 1) + static_cast<std::uint64_t>(t);
  }

  bool at_goals(const std::vector<NodeId>& locs) const {
    for (RobotId n = 0; n < robots; ++n) {
      if (locs[n] != inst.goals[n]) return false;
    }
    return true;
  }

  void record_if_better(Cost g) {
    if (g < best) {
      best = g;
      best_plan = current;
      found = true;
    }
  }

  // Enumerate every coordination triple set for a fixed move set, then recurse
  // into the next time step. `receivers` lists movers crossing risky edges.
  void coordination_rec(const std::vector<NodeId>& from, std::vector<NodeId>& to,
                        const std::vector<std::pair<RobotId, int>>& receivers,
                        size_t idx, std::vector<CoordinationTriple>& triples,
                        std::vector<char>& supporting, std::vector<Cost>& per_robot,
                        Cost step_cost, Cost g, int t) {
    if (idx == receivers.size()) {
      descend(to, triples, per_robot, g + step_cost, t);
      return;
    }
    const auto [r, edge_idx] = receivers[idx];
    // Option 1: receiver crosses unsupported.
    coordination_rec(from, to, receivers, idx + 1, triples, supporting, per_robot,
                     step_cost, g, t);
    // Option 2: any free stayer on a support node of this edge supports it.
    const RiskyInfo* info = inst.graph.risky(edge_idx);
    for (RobotId s = 0; s < robots; ++s) {
      if (s == r || supporting[s] || from[s] != to[s]) continue;
      if (std::find(info->support_nodes.begin(), info->support_nodes.end(), from[s]) ==
          info->support_nodes.end()) {
        continue;
      }
      const Cost receiver_delta = info->reduced_cost - inst.graph.base_cost(edge_idx);
      supporting[s] = 1;
      triples.push_back({r, s, from[r], to[r]});
      per_robot[r] += receiver_delta;
      per_robot[s] += inst.supporter_cost;
      coordination_rec(from, to, receivers, idx + 1, triples, supporting, per_robot,
                       step_cost + receiver_delta + inst.supporter_cost, g, t);
      per_robot[s] -= inst.supporter_cost;
      per_robot[r] -= receiver_delta;
      triples.pop_back();
      supporting[s] = 0;
    }
  }

  void descend(std::vector<NodeId>& to, std::vector<CoordinationTriple>& triples,
               std::vector<Cost>& per_robot, Cost g, int t) {
    if (g >= best) return;
    current.push_back({to, triples, per_robot});
    if (at_goals(to)) {
      record_if_better(g);
    } else {
      search(to, g, t + 1);
    }
    current.pop_back();
  }

  void search(const std::vector<NodeId>& from, Cost g, int t) {
    if (g >= best || t >= max_steps) return;
    if (++visit_budget_check % 1024 == 0) limits.enforce_deadline();

    const std::uint64_t key = state_key(from, t);
    auto it = seen.find(key);
    if (it != seen.end() && it->second <= g) return;
    seen[key] = g;

    // Per-robot move options: stay first, then neighbors ascending.
    std::vector<std::vector<NodeId>> options(robots);
    for (RobotId n = 0; n < robots; ++n) {
      options[n].push_back(from[n]);
      for (const Graph::Neighbor& nb : inst.graph.neighbors(from[n])) {
        options[n].push_back(nb.node);
      }
    }

    std::vector<size_t> pick(robots, 0);
    std::vector<NodeId> to(robots);
    std::vector<CoordinationTriple> triples;
    std::vector<char> supporting(robots, 0);
    std::vector<Cost> per_robot(robots, 0);
    while (true) {
      bool all_stay = true;
      Cost move_cost = 0;
      std::vector<std::pair<RobotId, int>> receivers;
      for (RobotId n = 0; n < robots; ++n) {
        to[n] = options[n][pick[n]];
        if (to[n] != from[n]) {
          all_stay = false;
          const int edge_idx = inst.graph.edge_index(from[n], to[n]);
          move_cost += inst.graph.base_cost(edge_idx);
          if (inst.graph.is_risky(edge_idx)) receivers.push_back({n, edge_idx});
        }
      }
      if (!all_stay) {
        for (RobotId n = 0; n < robots; ++n) {
          per_robot[n] = (to[n] != from[n])
                             ? inst.graph.base_cost(inst.graph.edge_index(from[n], to[n]))
                             : 0;
        }
        coordination_rec(from, to, receivers, 0, triples, supporting, per_robot,
                         move_cost, g, t);
      }
      // odometer increment
      int n = 0;
      for (; n < robots; ++n) {
        if (++pick[n] < options[n].size()) break;
        pick[n] = 0;
      }
      if (n == robots) break;
    }
  }
};

}  // namespace

OracleResult oracle_solve(const ProblemInstance& inst, const OracleLimits& limits,
                          const SolveLimits& solve_limits) {
  require_valid(inst);
  if (inst.graph.node_count() > limits.max_nodes) {
    throw ResourceLimitError("oracle: node count " +
                             std::to_string(inst.graph.node_count()) +
                             " exceeds limit " + std::to_string(limits.max_nodes));
  }
  if (inst.robot_count() > limits.max_robots) {
    throw ResourceLimitError("oracle: robot count " + std::to_string(inst.robot_count()) +
                             " exceeds limit " + std::to_string(limits.max_robots));
  }
  int max_steps = limits.max_steps;
  if (max_steps <= 0) {
    max_steps = inst.horizon ? *inst.horizon : 2 * inst.graph.node_count();
  }

  OracleResult result;
  const int robots = inst.robot_count();

  bool already_done = true;
  for (RobotId n = 0; n < robots; ++n) {
    if (inst.starts[n] != inst.goals[n]) {
      already_done = false;
      break;
    }
  }
  if (already_done) {
    result.feasible = true;
    result.cost = 0;
    result.solution.paths.resize(robots);
    for (RobotId n = 0; n < robots; ++n) result.solution.paths[n] = {inst.starts[n]};
    result.solution.per_robot_cost.assign(robots, 0);
    result.solution.total_cost = 0;
    return result;
  }

  Enumerator enumerator(inst, solve_limits, max_steps);

  // Seed the incumbent with the naive plan when it fits in the step budget;
  // branch-and-bound then only needs to beat it.
  Solution naive = naive_solve(inst);
  if (naive.step_count() <= max_steps) {
    enumerator.best = naive.total_cost;
    enumerator.found = true;
  }

  enumerator.search(inst.starts, 0, 0);

  if (!enumerator.found) return result;  // T too small to reach the goals
  result.feasible = true;

  if (enumerator.best_plan.empty()) {
    // Nothing beat the naive incumbent.
    result.solution = std::move(naive);
    result.cost = result.solution.total_cost;
    return result;
  }

  Solution sol;
  sol.paths.resize(robots);
  sol.per_robot_cost.assign(robots, 0);
  for (RobotId n = 0; n < robots; ++n) sol.paths[n].push_back(inst.starts[n]);
  for (size_t t = 0; t < enumerator.best_plan.size(); ++t) {
    const PlanStep& step = enumerator.best_plan[t];
    for (RobotId n = 0; n < robots; ++n) {
      sol.paths[n].push_back(step.to[n]);
      sol.per_robot_cost[n] += step.per_robot[n];
    }
    for (const CoordinationTriple& c : step.triples) {
      SolutionEvent ev;
      ev.step = static_cast<int>(t);
      ev.receiver = c.receiver;
      ev.supporter = c.supporter;
      ev.edge_u = c.edge_u;
      ev.edge_v = c.edge_v;
      ev.support_node = step.to[c.supporter];
      sol.events.push_back(ev);
    }
  }
  for (Cost c : sol.per_robot_cost) sol.total_cost += c;
  result.solution = std::move(sol);
  result.cost = result.solution.total_cost;
  return result;
}

}  // namespace tcgre
