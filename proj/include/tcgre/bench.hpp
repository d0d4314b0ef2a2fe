#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tcgre/generator.hpp"
#include "tcgre/solution.hpp"

namespace tcgre {

enum class Algo { jsg_ucs, jsg_astar, ces, rhoc_astar, naive, oracle };

const char* algo_name(Algo algo);
std::optional<Algo> algo_from_name(const std::string& name);

struct BenchRecord {
  Algo algo = Algo::naive;
  InstanceDescriptor descriptor;
  bool completed = false;
  Cost cost = 0;
  std::optional<double> true_opt;   // optimal reference / actual, when known
  std::optional<double> naive_opt;  // naive / actual
  double runtime_s = 0.0;
  bool timeout = false;  // set on any non-completion (deadline or cap)
  std::uint64_t expanded = 0;
  std::uint64_t cost_calcs = 0;
  bool valid = false;  // emitted solution passed validate_solution
};

struct BenchSuiteConfig {
  std::vector<int> node_counts{10, 15, 20, 25, 30};
  std::vector<Tier> tiers{Tier::sparse, Tier::moderate, Tier::dense};
  int seeds_per_type = 3;
  std::vector<int> team_sizes{3, 4, 5, 6, 7};
  std::vector<Algo> algorithms{Algo::jsg_ucs, Algo::jsg_astar, Algo::ces,
                               Algo::rhoc_astar};
  double timeout_s = 60.0;
  int rhoc_horizon = 4;
  int ces_max_uses = 1;
  int risky_count = 2;
  int support_nodes_per_edge = 1;
  std::int64_t supporter_cost = 2;
  std::uint64_t base_seed = 1;
  int jobs = 0;  // worker threads; 0 -> hardware concurrency
  // Kept tight enough that hopeless cells die quickly instead of burning the
  // whole timeout; override for focused experiments.
  SolveLimits cell_limits{10'000'000, 1'500'000, 2'000'000, std::nullopt};
};

// Deterministic graph seed for one suite slot.
std::uint64_t suite_seed(const BenchSuiteConfig& cfg, int node_count, Tier tier, int rep);

GeneratorConfig suite_generator_config(const BenchSuiteConfig& cfg, int node_count,
                                       Tier tier, int rep, int team_size);

// Runs every (graph, team size, algorithm) cell under the per-cell timeout.
// Failures of any kind become records with the timeout flag set; completed
// cells carry optimality ratios (true_opt only when an optimal reference
// finished on the same cell).
std::vector<BenchRecord> run_bench(const BenchSuiteConfig& cfg);

std::string records_to_csv(const std::vector<BenchRecord>& records);
void write_csv(const std::vector<BenchRecord>& records, const std::string& path);

// Static scatter plots (SVG), one per optimality metric, runtime on a log axis.
void write_scatter_plots(const std::vector<BenchRecord>& records,
                         const std::string& directory);

void emit_reports(const std::vector<BenchRecord>& records, const std::string& csv_path,
                  const std::string& plot_directory);

}  // namespace tcgre
