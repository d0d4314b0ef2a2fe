#include "tcgre/instance.hpp"

#include <set>
#include <sstream>

namespace tcgre {

namespace {

std::string edge_name(NodeId u, NodeId v) {
  std::ostringstream os;
  os << "e(" << u << "," << v << ")";
  return os.str();
}

}  // namespace

std::vector<Violation> validate_instance(const ProblemInstance& inst) {
  std::vector<Violation> out;
  const Graph& g = inst.graph;

  if (g.node_count() <= 0) {
    out.push_back({"node_count_positive", "node_count must be >= 1"});
    return out;  // nothing else is meaningful
  }

  std::set<std::pair<NodeId, NodeId>> seen;
  for (const EdgeSpec& e : g.edges()) {
    if (e.u < 0 || e.u >= g.node_count() || e.v < 0 || e.v >= g.node_count()) {
      out.push_back({"edge_endpoint_range", edge_name(e.u, e.v) + " endpoint out of range"});
      continue;
    }
    if (e.u == e.v) {
      out.push_back({"edge_no_self_loop", edge_name(e.u, e.v) + " is a self-loop"});
      continue;
    }
    auto norm = std::minmax(e.u, e.v);
    if (!seen.insert({norm.first, norm.second}).second) {
      out.push_back({"edge_duplicate", edge_name(e.u, e.v) + " appears more than once"});
    }
    if (e.base_cost < 0) {
      out.push_back({"edge_cost_nonnegative", edge_name(e.u, e.v) + " has negative cost"});
    }
  }

  std::set<std::pair<NodeId, NodeId>> risky_seen;
  for (const RiskySpec& r : g.risky_specs()) {
    const int idx = g.edge_index(r.u, r.v);
    if (idx < 0) {
      out.push_back({"risky_is_edge", edge_name(r.u, r.v) + " marked risky but not an edge"});
      continue;
    }
    auto norm = std::minmax(r.u, r.v);
    if (!risky_seen.insert({norm.first, norm.second}).second) {
      out.push_back({"risky_duplicate", edge_name(r.u, r.v) + " marked risky more than once"});
      continue;
    }
    if (r.info.support_nodes.empty()) {
      out.push_back({"risky_support_nonempty", "risky edge " + edge_name(r.u, r.v) +
                                                   " lacks support node"});
    }
    std::set<NodeId> support_dedup;
    for (NodeId s : r.info.support_nodes) {
      if (s < 0 || s >= g.node_count()) {
        out.push_back({"support_node_range", "support node " + std::to_string(s) +
                                                 " of " + edge_name(r.u, r.v) +
                                                 " out of range"});
      } else if (!support_dedup.insert(s).second) {
        out.push_back({"support_node_duplicate", "support node " + std::to_string(s) +
                                                     " repeated for " + edge_name(r.u, r.v)});
      }
    }
    if (r.info.reduced_cost < 0) {
      out.push_back({"reduced_cost_nonnegative",
                     edge_name(r.u, r.v) + " has negative reduced cost"});
    }
    if (r.info.reduced_cost > g.base_cost(idx)) {
      out.push_back({"reduced_cost_le_base", "reduced cost exceeds base cost on " +
                                                 edge_name(r.u, r.v)});
    }
  }

  if (!g.connected()) {
    out.push_back({"graph_connected", "graph is not connected"});
  }

  if (inst.starts.empty()) {
    out.push_back({"robot_count_positive", "instance has no robots"});
  }
  if (inst.starts.size() != inst.goals.size()) {
    out.push_back({"starts_goals_same_length",
                   "starts and goals differ in length (" +
                       std::to_string(inst.starts.size()) + " vs " +
                       std::to_string(inst.goals.size()) + ")"});
  }
  for (size_t n = 0; n < inst.starts.size(); ++n) {
    if (inst.starts[n] < 0 || inst.starts[n] >= g.node_count()) {
      out.push_back({"start_node_range",
                     "start of robot " + std::to_string(n) + " out of range"});
    }
  }
  for (size_t n = 0; n < inst.goals.size(); ++n) {
    if (inst.goals[n] < 0 || inst.goals[n] >= g.node_count()) {
      out.push_back({"goal_node_range",
                     "goal of robot " + std::to_string(n) + " out of range"});
    }
  }
  if (inst.supporter_cost < 0) {
    out.push_back({"supporter_cost_nonnegative", "supporter_cost is negative"});
  }
  if (inst.horizon && *inst.horizon <= 0) {
    out.push_back({"horizon_positive", "horizon must be positive when present"});
  }
  return out;
}

void require_valid(const ProblemInstance& inst) {
  const auto violations = validate_instance(inst);
  if (violations.empty()) return;
  std::ostringstream os;
  os << "invalid instance:";
  for (const Violation& v : violations) os << " [" << v.rule << "] " << v.detail << ";";
  throw ValidationError(os.str());
}

const char* tier_name(Tier tier) {
  switch (tier) {
    case Tier::sparse: return "sparse";
    case Tier::moderate: return "moderate";
    case Tier::dense: return "dense";
  }
  return "?";
}

std::optional<Tier> tier_from_name(const std::string& name) {
  if (name == "sparse") return Tier::sparse;
  if (name == "moderate") return Tier::moderate;
  if (name == "dense") return Tier::dense;
  return std::nullopt;
}

InstanceDescriptor describe_instance(const ProblemInstance& inst, Tier tier,
                                     std::uint64_t seed) {
  InstanceDescriptor d;
  d.node_count = inst.graph.node_count();
  d.edge_count = static_cast<int>(inst.graph.edges().size());
  d.risky_count = static_cast<int>(inst.graph.risky_specs().size());
  d.support_pair_count = 0;
  for (const RiskySpec& r : inst.graph.risky_specs()) {
    d.support_pair_count += static_cast<int>(r.info.support_nodes.size());
  }
  d.robot_count = inst.robot_count();
  d.tier = tier;
  d.seed = seed;
  return d;
}

}  // namespace tcgre
