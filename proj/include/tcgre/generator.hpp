#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "tcgre/instance.hpp"

namespace tcgre {

struct CostRange {
  std::int64_t lo = 1;
  std::int64_t hi = 1;  // inclusive, whole cost units
};

// Seeded-deterministic random instance recipe. Connectivity tiers map to edge
// density on top of a forced random spanning tree:
//   sparse:   tree + round(0.05 * |V|) extra edges
//   moderate: tree + each remaining pair with probability 2*ln|V| / |V|
//   dense:    tree + each remaining pair with probability 0.5
struct GeneratorConfig {
  int node_count = 10;
  Tier tier = Tier::sparse;
  // Fraction of edges marked risky; an explicit risky_count overrides it.
  // fraction == 0 means "no risky edges"; a positive fraction that rounds to
  // zero edges is a configuration error.
  double risky_fraction = 0.1;
  std::optional<int> risky_count;
  int support_nodes_per_edge = 1;
  int robot_count = 3;
  CostRange base_cost{1, 10};
  CostRange risky_base_cost{20, 100};
  CostRange reduced_cost{1, 5};
  std::int64_t supporter_cost = 2;  // whole units
  std::uint64_t seed = 0;
};

// Same seed, same config -> structurally identical instance and byte-identical
// file. Robot starts/goals are drawn after the graph, one robot at a time, so
// configs differing only in robot_count share the graph and the first robots.
ProblemInstance generate_instance(const GeneratorConfig& cfg);

// Portable bounded sampling on top of mt19937_64 (no distribution objects, so
// results do not depend on the standard library implementation).
std::uint64_t rng_below(std::mt19937_64& rng, std::uint64_t bound);
std::int64_t rng_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);
double rng_unit(std::mt19937_64& rng);  // [0, 1) with 53 random bits

}  // namespace tcgre
