#pragma once

#include <map>
#include <vector>

#include "tcgre/instance.hpp"
#include "tcgre/solution.hpp"

namespace tcgre {

// Pessimistic prices every edge at its base cost; optimistic prices risky
// edges at min(base, supported) — i.e. assumes a supporter will always be in
// place when it helps.
enum class CostView { pessimistic, optimistic };

Cost view_cost(const ProblemInstance& inst, int edge_index, CostView view);

struct PathResult {
  bool found = false;
  std::vector<NodeId> path;  // path.front() == src, path.back() == dst
  Cost cost = kInfiniteCost;
};

// Minimum-cost path under the view; among equal-cost simple paths the
// lexicographically smallest node sequence wins.
PathResult shortest_path(const ProblemInstance& inst, NodeId src, NodeId dst,
                         CostView view);

// Exact distance to every node from `source` under the view.
std::vector<Cost> distances_from(const ProblemInstance& inst, NodeId source,
                                 CostView view);

// [robot][node] -> exact distance node -> goals[robot] under the view.
std::vector<std::vector<Cost>> all_goal_distances(const ProblemInstance& inst,
                                                  CostView view);

// Every robot follows its individual pessimistic shortest path; no events.
Solution naive_solve(const ProblemInstance& inst);

// Lazy per-source Dijkstra cache for one instance/view. Built once, then
// read-only: concurrent solves must each own their cache.
class PathCache {
 public:
  PathCache(const ProblemInstance& inst, CostView view) : inst_(inst), view_(view) {}

  const std::vector<Cost>& distances(NodeId source);
  Cost distance(NodeId source, NodeId target) { return distances(source)[target]; }
  const PathResult& path(NodeId source, NodeId target);

 private:
  const ProblemInstance& inst_;
  CostView view_;
  std::map<NodeId, std::vector<Cost>> dist_;
  std::map<std::pair<NodeId, NodeId>, PathResult> paths_;
};

}  // namespace tcgre
