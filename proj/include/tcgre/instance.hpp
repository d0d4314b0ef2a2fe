#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcgre/graph.hpp"
#include "tcgre/types.hpp"

namespace tcgre {

struct ProblemInstance {
  Graph graph;
  std::vector<NodeId> starts;
  std::vector<NodeId> goals;
  Cost supporter_cost = 0;       // c', paid by the supporting robot
  std::optional<int> horizon;    // enumeration bound only; search ignores it

  int robot_count() const { return static_cast<int>(starts.size()); }

  // Effective receiver-side cost of a supported crossing of a risky edge.
  Cost supported_cost(int edge_index) const {
    const RiskyInfo* info = graph.risky(edge_index);
    return info->reduced_cost + supporter_cost;
  }
  // Saving from supporting the crossing; may be negative when coordination
  // never helps on the edge.
  Cost coordination_gain(int edge_index) const {
    return graph.base_cost(edge_index) - supported_cost(edge_index);
  }

  bool operator==(const ProblemInstance& other) const {
    return graph == other.graph && starts == other.starts && goals == other.goals &&
           supporter_cost == other.supporter_cost && horizon == other.horizon;
  }
};

struct Violation {
  std::string rule;    // stable identifier, e.g. "risky_support_nonempty"
  std::string detail;  // human-readable location/context
};

// Empty result iff every model invariant holds. Violations are data, not
// failures; callers that need hard errors wrap this themselves.
std::vector<Violation> validate_instance(const ProblemInstance& inst);

void require_valid(const ProblemInstance& inst);  // throws ValidationError

enum class Tier { sparse, moderate, dense };

const char* tier_name(Tier tier);
std::optional<Tier> tier_from_name(const std::string& name);

struct InstanceDescriptor {
  int node_count = 0;
  int edge_count = 0;
  int risky_count = 0;
  int support_pair_count = 0;  // sum of |S_e| over risky edges
  int robot_count = 0;
  Tier tier = Tier::sparse;
  std::uint64_t seed = 0;
};

// Descriptor counts derived from the instance itself; tier/seed supplied by
// whoever generated it.
InstanceDescriptor describe_instance(const ProblemInstance& inst, Tier tier,
                                     std::uint64_t seed);

}  // namespace tcgre
