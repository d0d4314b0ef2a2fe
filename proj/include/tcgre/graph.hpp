#pragma once

#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tcgre/types.hpp"

namespace tcgre {

struct EdgeSpec {
  NodeId u = 0;
  NodeId v = 0;
  Cost base_cost = 0;
};

struct RiskyInfo {
  Cost reduced_cost = 0;
  std::vector<NodeId> support_nodes;
};

struct RiskySpec {
  NodeId u = 0;
  NodeId v = 0;
  RiskyInfo info;
};

// Undirected weighted graph with a risky-edge subset. Construction keeps the
// input verbatim (so validation can report bad entries); the adjacency index
// covers only well-formed edges. Immutable after construction.
class Graph {
 public:
  struct Neighbor {
    NodeId node;
    int edge;  // index into edges()
  };

  Graph() = default;
  Graph(int node_count, std::vector<EdgeSpec> edges, std::vector<RiskySpec> risky);

  int node_count() const { return node_count_; }
  const std::vector<EdgeSpec>& edges() const { return edges_; }
  const std::vector<RiskySpec>& risky_specs() const { return risky_; }

  // -1 when (u, v) is not an edge. Order-insensitive.
  int edge_index(NodeId u, NodeId v) const;
  const EdgeSpec& edge(int index) const { return edges_[index]; }
  Cost base_cost(int index) const { return edges_[index].base_cost; }

  // nullptr for non-risky edges.
  const RiskyInfo* risky(int index) const;
  bool is_risky(int index) const { return risky(index) != nullptr; }

  const std::vector<Neighbor>& neighbors(NodeId v) const { return adjacency_[v]; }
  int degree(NodeId v) const { return static_cast<int>(adjacency_[v].size()); }

  bool connected() const;

  // Content equality up to edge/risky ordering.
  bool operator==(const Graph& other) const;

 private:
  static std::uint64_t key(NodeId u, NodeId v);

  int node_count_ = 0;
  std::vector<EdgeSpec> edges_;
  std::vector<RiskySpec> risky_;
  std::unordered_map<std::uint64_t, int> edge_index_;
  std::unordered_map<int, int> risky_by_edge_;  // edge index -> risky_ index
  std::vector<std::vector<Neighbor>> adjacency_;
};

}  // namespace tcgre
