#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "tcgre/generator.hpp"
#include "tcgre/instance.hpp"
#include "tcgre/routing.hpp"

namespace tcgre::testing {

// Four-node fixture used across the suites:
//   0 --1-- 1 --10(risky, ~1, S={3})-- 2,   0 --2-- 3,  c' = 1
// robot A: 0 -> 2, robot B: 3 -> 3. Optimal 3, naive 11.
inline ProblemInstance make_t1() {
  ProblemInstance inst;
  std::vector<EdgeSpec> edges{
      {0, 1, cost_from_units(1)},
      {1, 2, cost_from_units(10)},
      {0, 3, cost_from_units(2)},
  };
  std::vector<RiskySpec> risky(1);
  risky[0].u = 1;
  risky[0].v = 2;
  risky[0].info.reduced_cost = cost_from_units(1);
  risky[0].info.support_nodes = {3};
  inst.graph = Graph(4, std::move(edges), std::move(risky));
  inst.starts = {0, 3};
  inst.goals = {2, 3};
  inst.supporter_cost = cost_from_units(1);
  return inst;
}

// Three-node swap fixture whose optimum uses the support pair
// (edge (1,2), node 0) twice: the robots exchange sides of the risky edge and
// take turns supporting from node 0. Optimal 8; single-use schedules pay a
// full unsupported crossing (104).
inline ProblemInstance make_r2() {
  ProblemInstance inst;
  std::vector<EdgeSpec> edges{
      {0, 1, cost_from_units(1)},
      {1, 2, cost_from_units(100)},
  };
  std::vector<RiskySpec> risky(1);
  risky[0].u = 1;
  risky[0].v = 2;
  risky[0].info.reduced_cost = cost_from_units(1);
  risky[0].info.support_nodes = {0};
  inst.graph = Graph(3, std::move(edges), std::move(risky));
  inst.starts = {1, 2};
  inst.goals = {2, 1};
  inst.supporter_cost = cost_from_units(1);
  return inst;
}

// Deterministic family of tiny instances for oracle cross-checks.
inline ProblemInstance make_tiny(std::uint64_t seed, int robots = 2) {
  GeneratorConfig cfg;
  cfg.node_count = 4 + static_cast<int>(seed % 3);  // 4..6
  cfg.tier = Tier::moderate;
  cfg.risky_count = 1 + static_cast<int>(seed % 2);  // 1..2
  cfg.support_nodes_per_edge = cfg.node_count > 4 ? 2 : 1;
  cfg.robot_count = robots;
  cfg.base_cost = {1, 6};
  cfg.risky_base_cost = {8, 20};
  cfg.reduced_cost = {1, 3};
  cfg.supporter_cost = 1;
  cfg.seed = seed;
  return generate_instance(cfg);
}

// Test-side reference: minimum-cost simple path by full enumeration, ties
// broken toward the lexicographically smallest node sequence.
inline PathResult enumerate_best_path(const ProblemInstance& inst, NodeId src,
                                      NodeId dst, CostView view) {
  PathResult best;
  std::vector<NodeId> path{src};
  std::vector<char> used(inst.graph.node_count(), 0);
  used[src] = 1;
  std::function<void(NodeId, Cost)> dfs = [&](NodeId v, Cost cost) {
    if (v == dst) {
      if (!best.found || cost < best.cost ||
          (cost == best.cost && path < best.path)) {
        best.found = true;
        best.cost = cost;
        best.path = path;
      }
      return;
    }
    for (const Graph::Neighbor& nb : inst.graph.neighbors(v)) {
      if (used[nb.node]) continue;
      used[nb.node] = 1;
      path.push_back(nb.node);
      dfs(nb.node, cost + view_cost(inst, nb.edge, view));
      path.pop_back();
      used[nb.node] = 0;
    }
  };
  dfs(src, 0);
  return best;
}

// Test-side reference for the assignment module: try every pairing.
inline Cost brute_force_assignment(const std::vector<std::vector<Cost>>& weight) {
  const int receivers = static_cast<int>(weight.size());
  const int supporters = receivers == 0 ? 0 : static_cast<int>(weight[0].size());
  std::vector<char> used(supporters, 0);
  std::function<Cost(int)> rec = [&](int r) -> Cost {
    if (r == receivers) return 0;
    Cost best = rec(r + 1);  // leave r unmatched
    for (int s = 0; s < supporters; ++s) {
      if (used[s] || weight[r][s] <= 0) continue;
      used[s] = 1;
      best = std::max(best, weight[r][s] + rec(r + 1));
      used[s] = 0;
    }
    return best;
  };
  return rec(0);
}

}  // namespace tcgre::testing
