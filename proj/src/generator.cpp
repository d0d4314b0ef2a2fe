#include "tcgre/generator.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace tcgre {

std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t value;
  do {
    value = rng();
  } while (value >= limit);
  return value % bound;
}

std::int64_t rng_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  rng_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

double rng_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

ProblemInstance generate_instance(const GeneratorConfig& cfg) {
  if (cfg.node_count < 2) throw ValidationError("generator: need at least 2 nodes");
  if (cfg.robot_count < 1) throw ValidationError("generator: need at least 1 robot");
  if (cfg.support_nodes_per_edge < 1) {
    throw ValidationError("generator: support_nodes_per_edge must be >= 1");
  }
  if (cfg.support_nodes_per_edge > cfg.node_count - 2) {
    throw ValidationError(
        "generator: not enough non-endpoint nodes for the requested support nodes");
  }
  auto check_range = [](const CostRange& r, const char* name) {
    if (r.lo < 0 || r.hi < r.lo) {
      throw ValidationError(std::string("generator: bad cost range for ") + name);
    }
  };
  check_range(cfg.base_cost, "base_cost");
  check_range(cfg.risky_base_cost, "risky_base_cost");
  check_range(cfg.reduced_cost, "reduced_cost");
  if (cfg.supporter_cost < 0) {
    throw ValidationError("generator: supporter_cost must be nonnegative");
  }
  if (cfg.risky_fraction < 0 || cfg.risky_fraction >= 1) {
    throw ValidationError("generator: risky_fraction must lie in [0, 1)");
  }

  std::mt19937_64 rng(cfg.seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);
  const int v = cfg.node_count;

  // Random spanning tree: attach each node to a uniformly chosen predecessor.
  std::set<std::pair<NodeId, NodeId>> edge_set;
  std::vector<std::pair<NodeId, NodeId>> edge_list;
  auto add_edge = [&](NodeId a, NodeId b) {
    auto norm = std::minmax(a, b);
    if (edge_set.insert(norm).second) {
      edge_list.push_back(norm);
      return true;
    }
    return false;
  };
  for (NodeId i = 1; i < v; ++i) {
    add_edge(static_cast<NodeId>(rng_below(rng, static_cast<std::uint64_t>(i))), i);
  }

  switch (cfg.tier) {
    case Tier::sparse: {
      const int extra = static_cast<int>(std::llround(0.05 * v));
      const std::uint64_t max_edges =
          static_cast<std::uint64_t>(v) * static_cast<std::uint64_t>(v - 1) / 2;
      int added = 0;
      while (added < extra && edge_list.size() < max_edges) {
        const NodeId a = static_cast<NodeId>(rng_below(rng, v));
        const NodeId b = static_cast<NodeId>(rng_below(rng, v));
        if (a == b) continue;
        if (add_edge(a, b)) ++added;
      }
      break;
    }
    case Tier::moderate:
    case Tier::dense: {
      const double p = cfg.tier == Tier::dense
                           ? 0.5
                           : 2.0 * std::log(static_cast<double>(v)) / static_cast<double>(v);
      for (NodeId a = 0; a < v; ++a) {
        for (NodeId b = a + 1; b < v; ++b) {
          if (edge_set.count({a, b})) continue;
          if (rng_unit(rng) < p) add_edge(a, b);
        }
      }
      break;
    }
  }

  // Risky subset.
  int risky_count = 0;
  if (cfg.risky_count) {
    risky_count = *cfg.risky_count;
    if (risky_count < 0 || risky_count > static_cast<int>(edge_list.size())) {
      throw ValidationError("generator: risky_count out of range for generated graph");
    }
  } else if (cfg.risky_fraction > 0) {
    risky_count = static_cast<int>(
        std::llround(cfg.risky_fraction * static_cast<double>(edge_list.size())));
    if (risky_count == 0) {
      throw ValidationError("generator: risky_fraction rounds to zero risky edges");
    }
    risky_count = std::min<int>(risky_count, static_cast<int>(edge_list.size()));
  }
  std::vector<int> order(edge_list.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  for (size_t i = order.size(); i > 1; --i) {  // Fisher-Yates
    std::swap(order[i - 1], order[rng_below(rng, i)]);
  }
  std::vector<char> is_risky(edge_list.size(), 0);
  for (int k = 0; k < risky_count; ++k) is_risky[order[k]] = 1;

  // Costs and support nodes.
  std::vector<EdgeSpec> edges;
  std::vector<RiskySpec> risky;
  for (size_t i = 0; i < edge_list.size(); ++i) {
    EdgeSpec e;
    e.u = edge_list[i].first;
    e.v = edge_list[i].second;
    if (is_risky[i]) {
      const std::int64_t base = rng_int(rng, cfg.risky_base_cost.lo, cfg.risky_base_cost.hi);
      e.base_cost = cost_from_units(base);
      RiskySpec r;
      r.u = e.u;
      r.v = e.v;
      r.info.reduced_cost =
          cost_from_units(rng_int(rng, cfg.reduced_cost.lo,
                                  std::min(cfg.reduced_cost.hi, base)));
      std::vector<NodeId> candidates;
      for (NodeId n = 0; n < v; ++n) {
        if (n != e.u && n != e.v) candidates.push_back(n);
      }
      for (int s = 0; s < cfg.support_nodes_per_edge; ++s) {
        const size_t pick = rng_below(rng, candidates.size());
        r.info.support_nodes.push_back(candidates[pick]);
        candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
      }
      std::sort(r.info.support_nodes.begin(), r.info.support_nodes.end());
      risky.push_back(std::move(r));
    } else {
      e.base_cost = cost_from_units(rng_int(rng, cfg.base_cost.lo, cfg.base_cost.hi));
    }
    edges.push_back(e);
  }

  ProblemInstance inst;
  inst.graph = Graph(v, std::move(edges), std::move(risky));
  inst.supporter_cost = cost_from_units(cfg.supporter_cost);
  for (int n = 0; n < cfg.robot_count; ++n) {
    const NodeId start = static_cast<NodeId>(rng_below(rng, v));
    NodeId goal = start;
    while (goal == start) goal = static_cast<NodeId>(rng_below(rng, v));
    inst.starts.push_back(start);
    inst.goals.push_back(goal);
  }

  require_valid(inst);
  return inst;
}

}  // namespace tcgre
