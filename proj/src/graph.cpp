#include "tcgre/graph.hpp"

#include <algorithm>

namespace tcgre {

std::uint64_t Graph::key(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
         static_cast<std::uint32_t>(v);
}

Graph::Graph(int node_count, std::vector<EdgeSpec> edges, std::vector<RiskySpec> risky)
    : node_count_(node_count), edges_(std::move(edges)), risky_(std::move(risky)) {
  adjacency_.assign(node_count_ > 0 ? node_count_ : 0, {});
  for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
    const EdgeSpec& e = edges_[i];
    const bool valid = e.u >= 0 && e.u < node_count_ && e.v >= 0 && e.v < node_count_ &&
                       e.u != e.v;
    if (!valid) continue;
    if (edge_index_.count(key(e.u, e.v))) continue;  // duplicate; validator reports
    edge_index_.emplace(key(e.u, e.v), i);
    adjacency_[e.u].push_back({e.v, i});
    adjacency_[e.v].push_back({e.u, i});
  }
  for (auto& adj : adjacency_) {
    std::sort(adj.begin(), adj.end(),
              [](const Neighbor& a, const Neighbor& b) { return a.node < b.node; });
  }
  for (int r = 0; r < static_cast<int>(risky_.size()); ++r) {
    const int idx = edge_index(risky_[r].u, risky_[r].v);
    if (idx < 0) continue;
    risky_by_edge_.emplace(idx, r);  // first entry wins on duplicates
  }
}

int Graph::edge_index(NodeId u, NodeId v) const {
  if (u < 0 || v < 0 || u >= node_count_ || v >= node_count_) return -1;
  auto it = edge_index_.find(key(u, v));
  return it == edge_index_.end() ? -1 : it->second;
}

const RiskyInfo* Graph::risky(int index) const {
  auto it = risky_by_edge_.find(index);
  return it == risky_by_edge_.end() ? nullptr : &risky_[it->second].info;
}

bool Graph::connected() const {
  if (node_count_ <= 0) return false;
  std::vector<char> seen(node_count_, 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    for (const Neighbor& nb : adjacency_[v]) {
      if (!seen[nb.node]) {
        seen[nb.node] = 1;
        ++count;
        stack.push_back(nb.node);
      }
    }
  }
  return count == node_count_;
}

bool Graph::operator==(const Graph& other) const {
  if (node_count_ != other.node_count_) return false;
  auto norm_edges = [](const Graph& g) {
    std::vector<EdgeSpec> es = g.edges_;
    for (auto& e : es) {
      if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(es.begin(), es.end(), [](const EdgeSpec& a, const EdgeSpec& b) {
      return std::tie(a.u, a.v, a.base_cost) < std::tie(b.u, b.v, b.base_cost);
    });
    return es;
  };
  auto norm_risky = [](const Graph& g) {
    std::vector<RiskySpec> rs = g.risky_;
    for (auto& r : rs) {
      if (r.u > r.v) std::swap(r.u, r.v);
      std::sort(r.info.support_nodes.begin(), r.info.support_nodes.end());
    }
    std::sort(rs.begin(), rs.end(), [](const RiskySpec& a, const RiskySpec& b) {
      return std::tie(a.u, a.v) < std::tie(b.u, b.v);
    });
    return rs;
  };
  auto ra = norm_risky(*this);
  auto rb = norm_risky(other);
  if (ra.size() != rb.size()) return false;
  for (size_t i = 0; i < ra.size(); ++i) {
    if (ra[i].u != rb[i].u || ra[i].v != rb[i].v ||
        ra[i].info.reduced_cost != rb[i].info.reduced_cost ||
        ra[i].info.support_nodes != rb[i].info.support_nodes) {
      return false;
    }
  }
  auto ea = norm_edges(*this);
  auto eb = norm_edges(other);
  if (ea.size() != eb.size()) return false;
  for (size_t i = 0; i < ea.size(); ++i) {
    if (ea[i].u != eb[i].u || ea[i].v != eb[i].v || ea[i].base_cost != eb[i].base_cost) {
      return false;
    }
  }
  return true;
}

}  // namespace tcgre
