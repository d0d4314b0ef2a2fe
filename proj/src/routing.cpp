#include "tcgre/routing.hpp"

#include <algorithm>
#include <queue>

namespace tcgre {

Cost view_cost(const ProblemInstance& inst, int edge_index, CostView view) {
  const Cost base = inst.graph.base_cost(edge_index);
  if (view == CostView::pessimistic || !inst.graph.is_risky(edge_index)) return base;
  return std::min(base, inst.supported_cost(edge_index));
}

std::vector<Cost> distances_from(const ProblemInstance& inst, NodeId source,
                                 CostView view) {
  const Graph& g = inst.graph;
  std::vector<Cost> dist(g.node_count(), kInfiniteCost);
  using Entry = std::pair<Cost, NodeId>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> open;
  dist[source] = 0;
  open.push({0, source});
  while (!open.empty()) {
    const auto [d, v] = open.top();
    open.pop();
    if (d != dist[v]) continue;
    for (const Graph::Neighbor& nb : g.neighbors(v)) {
      const Cost nd = d + view_cost(inst, nb.edge, view);
      if (nd < dist[nb.node]) {
        dist[nb.node] = nd;
        open.push({nd, nb.node});
      }
    }
  }
  return dist;
}

namespace {

// Lexicographically smallest minimum-cost simple path, grown greedily along
// the shortest-path certificate dist(v) == w(v, x) + dist(x). With strictly
// positive costs the first branch always completes; zero-cost edges may force
// backtracking over revisited nodes.
PathResult lex_smallest_path(const ProblemInstance& inst, NodeId src, NodeId dst,
                             CostView view, const std::vector<Cost>& dist_to_dst) {
  PathResult result;
  if (dist_to_dst[src] >= kInfiniteCost) return result;

  const Graph& g = inst.graph;
  std::vector<char> on_path(g.node_count(), 0);
  std::vector<NodeId> path{src};
  // frame i holds the index of the next neighbor of path[i] to try
  std::vector<size_t> next_choice{0};
  on_path[src] = 1;

  while (!path.empty()) {
    const NodeId v = path.back();
    if (v == dst) break;
    const auto& nbs = g.neighbors(v);
    bool advanced = false;
    for (size_t& i = next_choice.back(); i < nbs.size(); ++i) {
      const NodeId x = nbs[i].node;
      if (on_path[x]) continue;
      if (view_cost(inst, nbs[i].edge, view) + dist_to_dst[x] != dist_to_dst[v]) continue;
      ++i;
      path.push_back(x);
      next_choice.push_back(0);
      on_path[x] = 1;
      advanced = true;
      break;
    }
    if (!advanced) {
      on_path[v] = 0;
      path.pop_back();
      next_choice.pop_back();
    }
  }
  if (path.empty()) return result;  // only reachable with zero-cost cycles
  result.found = true;
  result.path = std::move(path);
  result.cost = dist_to_dst[src];
  return result;
}

}  // namespace

PathResult shortest_path(const ProblemInstance& inst, NodeId src, NodeId dst,
                         CostView view) {
  if (src == dst) {
    PathResult r;
    r.found = true;
    r.path = {src};
    r.cost = 0;
    return r;
  }
  const std::vector<Cost> dist = distances_from(inst, dst, view);
  return lex_smallest_path(inst, src, dst, view, dist);
}

std::vector<std::vector<Cost>> all_goal_distances(const ProblemInstance& inst,
                                                  CostView view) {
  std::vector<std::vector<Cost>> out;
  out.reserve(inst.robot_count());
  for (RobotId n = 0; n < inst.robot_count(); ++n) {
    out.push_back(distances_from(inst, inst.goals[n], view));
  }
  return out;
}

Solution naive_solve(const ProblemInstance& inst) {
  Solution sol;
  const int robots = inst.robot_count();
  sol.paths.resize(robots);
  sol.per_robot_cost.assign(robots, 0);

  size_t longest = 1;
  for (RobotId n = 0; n < robots; ++n) {
    PathResult r = shortest_path(inst, inst.starts[n], inst.goals[n], CostView::pessimistic);
    if (!r.found) throw ValidationError("naive_solve: robot " + std::to_string(n) +
                                        " cannot reach its goal");
    sol.paths[n] = std::move(r.path);
    sol.per_robot_cost[n] = r.cost;
    sol.total_cost += r.cost;
    longest = std::max(longest, sol.paths[n].size());
  }
  for (RobotId n = 0; n < robots; ++n) {
    sol.paths[n].resize(longest, inst.goals[n]);  // pad with stays at the goal
  }
  return sol;
}

const std::vector<Cost>& PathCache::distances(NodeId source) {
  auto it = dist_.find(source);
  if (it == dist_.end()) {
    it = dist_.emplace(source, distances_from(inst_, source, view_)).first;
  }
  return it->second;
}

const PathResult& PathCache::path(NodeId source, NodeId target) {
  auto key = std::make_pair(source, target);
  auto it = paths_.find(key);
  if (it == paths_.end()) {
    it = paths_.emplace(key, shortest_path(inst_, source, target, view_)).first;
  }
  return it->second;
}

}  // namespace tcgre
