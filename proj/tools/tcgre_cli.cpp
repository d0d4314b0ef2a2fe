#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tcgre/bench.hpp"
#include "tcgre/ces_solver.hpp"
#include "tcgre/io.hpp"
#include "tcgre/jsg_solver.hpp"
#include "tcgre/oracle.hpp"
#include "tcgre/rhoc_solver.hpp"
#include "tcgre/routing.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitResource = 2;
constexpr int kExitUsage = 64;

struct GenerateArgs {
  int nodes = 10;
  std::string tier = "sparse";
  double risky_fraction = 0.1;
  int risky_count = -1;  // <0: use fraction
  int supports = 1;
  int robots = 3;
  std::int64_t supporter_cost = 2;
  std::uint64_t seed = 0;
  std::string out;
};

struct SolveArgs {
  std::string instance_path;
  std::string algo = "jsg-astar";
  int k = 3;
  int max_uses = 1;
  double timeout_s = 0.0;
  std::string out;
};

struct VerifyArgs {
  std::string instance_path;
  std::string solution_path;
};

struct BenchArgs {
  std::vector<int> nodes{10, 15, 20, 25, 30};
  std::vector<std::string> tiers{"sparse", "moderate", "dense"};
  int seeds = 3;
  std::vector<int> team_sizes{3, 4, 5, 6, 7};
  std::vector<std::string> algos{"jsg-ucs", "jsg-astar", "ces", "rhoc-astar"};
  double timeout_s = 60.0;
  int k = 4;
  int max_uses = 1;
  int risky_count = 2;
  int supports = 1;
  std::uint64_t base_seed = 1;
  int jobs = 0;
  std::string out = "bench_out";
};

int run_generate(const GenerateArgs& a) {
  tcgre::GeneratorConfig cfg;
  cfg.node_count = a.nodes;
  const auto tier = tcgre::tier_from_name(a.tier);
  if (!tier) {
    std::cerr << "unknown tier: " << a.tier << "\n";
    return kExitValidation;
  }
  cfg.tier = *tier;
  cfg.risky_fraction = a.risky_fraction;
  if (a.risky_count >= 0) cfg.risky_count = a.risky_count;
  cfg.support_nodes_per_edge = a.supports;
  cfg.robot_count = a.robots;
  cfg.supporter_cost = a.supporter_cost;
  cfg.seed = a.seed;

  const tcgre::ProblemInstance inst = tcgre::generate_instance(cfg);
  const std::string text = tcgre::write_instance(inst);
  if (a.out.empty()) {
    std::cout << text;
  } else {
    tcgre::write_text_file(a.out, text);
    std::cout << "wrote " << a.out << "\n";
  }
  return kExitOk;
}

int run_solve(const SolveArgs& a) {
  const tcgre::ProblemInstance inst = tcgre::load_instance(a.instance_path);
  const auto algo = tcgre::algo_from_name(a.algo);
  if (!algo) {
    std::cerr << "unknown algorithm: " << a.algo << "\n";
    return kExitUsage;
  }
  tcgre::SolveLimits limits;
  if (a.timeout_s > 0) {
    limits.deadline = std::chrono::steady_clock::now() +
                      std::chrono::microseconds(static_cast<std::int64_t>(a.timeout_s * 1e6));
  }

  tcgre::Solution sol;
  switch (*algo) {
    case tcgre::Algo::naive:
      sol = tcgre::naive_solve(inst);
      break;
    case tcgre::Algo::jsg_ucs:
      sol = tcgre::solve_ucs(inst, limits).solution;
      break;
    case tcgre::Algo::jsg_astar:
      sol = tcgre::solve_astar(inst, limits).solution;
      break;
    case tcgre::Algo::ces:
      sol = tcgre::solve_ces(inst, a.max_uses, limits).solution;
      break;
    case tcgre::Algo::rhoc_astar: {
      tcgre::RhocConfig rc;
      rc.horizon = a.k;
      sol = tcgre::solve_rhoc(inst, rc, limits).solution;
      break;
    }
    case tcgre::Algo::oracle: {
      tcgre::OracleResult r = tcgre::oracle_solve(inst, tcgre::OracleLimits{}, limits);
      if (!r.feasible) {
        std::cerr << "oracle: no plan within the step bound\n";
        return kExitValidation;
      }
      sol = std::move(r.solution);
      break;
    }
  }
  std::cout << "cost " << tcgre::cost_to_string(sol.total_cost) << "\n";
  if (!a.out.empty()) tcgre::save_solution(a.out, sol);
  return kExitOk;
}

int run_verify(const VerifyArgs& a) {
  const tcgre::ProblemInstance inst = tcgre::load_instance(a.instance_path);
  const tcgre::Solution sol = tcgre::load_solution(a.solution_path);
  const tcgre::SolutionCheck check = tcgre::validate_solution(inst, sol);
  if (!check.ok()) {
    for (const tcgre::Violation& v : check.violations) {
      std::cerr << "[" << v.rule << "] " << v.detail << "\n";
    }
    return kExitValidation;
  }
  std::cout << tcgre::cost_to_string(check.recomputed_total) << "\n";
  return kExitOk;
}

int run_bench_cmd(const BenchArgs& a) {
  tcgre::BenchSuiteConfig cfg;
  cfg.node_counts = a.nodes;
  cfg.tiers.clear();
  for (const std::string& t : a.tiers) {
    const auto tier = tcgre::tier_from_name(t);
    if (!tier) {
      std::cerr << "unknown tier: " << t << "\n";
      return kExitValidation;
    }
    cfg.tiers.push_back(*tier);
  }
  cfg.seeds_per_type = a.seeds;
  cfg.team_sizes = a.team_sizes;
  cfg.algorithms.clear();
  for (const std::string& name : a.algos) {
    const auto algo = tcgre::algo_from_name(name);
    if (!algo) {
      std::cerr << "unknown algorithm: " << name << "\n";
      return kExitUsage;
    }
    cfg.algorithms.push_back(*algo);
  }
  cfg.timeout_s = a.timeout_s;
  cfg.rhoc_horizon = a.k;
  cfg.ces_max_uses = a.max_uses;
  cfg.risky_count = a.risky_count;
  cfg.support_nodes_per_edge = a.supports;
  cfg.base_seed = a.base_seed;
  cfg.jobs = a.jobs;

  const auto records = tcgre::run_bench(cfg);
  std::filesystem::create_directories(a.out);
  tcgre::emit_reports(records, a.out + "/results.csv", a.out);

  size_t timeouts = 0;
  for (const auto& r : records) timeouts += r.timeout ? 1 : 0;
  std::cout << records.size() << " records (" << timeouts << " without a solution), "
            << "reports in " << a.out << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Team coordination planning on graphs with risky edges"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* cmd_gen = app.add_subcommand("generate", "Generate a random instance file");
  cmd_gen->add_option("--nodes", gen.nodes, "Number of nodes");
  cmd_gen->add_option("--tier", gen.tier, "Connectivity tier: sparse|moderate|dense");
  cmd_gen->add_option("--risky-frac", gen.risky_fraction, "Fraction of edges made risky");
  cmd_gen->add_option("--risky-count", gen.risky_count,
                      "Exact number of risky edges (overrides --risky-frac)");
  cmd_gen->add_option("--supports-per-edge", gen.supports, "Support nodes per risky edge");
  cmd_gen->add_option("--robots", gen.robots, "Team size");
  cmd_gen->add_option("--cprime", gen.supporter_cost, "Supporter coordination cost");
  cmd_gen->add_option("--seed", gen.seed, "Random seed");
  cmd_gen->add_option("--out", gen.out, "Output instance path (stdout when omitted)");

  SolveArgs solve;
  auto* cmd_solve = app.add_subcommand("solve", "Solve an instance file");
  cmd_solve->add_option("instance", solve.instance_path, "Instance JSON file")->required();
  cmd_solve->add_option("--algo", solve.algo,
                        "jsg-ucs|jsg-astar|ces|rhoc-astar|naive|oracle");
  cmd_solve->add_option("--k", solve.k, "Receding-horizon window length");
  cmd_solve->add_option("--max-uses", solve.max_uses, "Max uses per support pair (ces)");
  cmd_solve->add_option("--timeout", solve.timeout_s, "Wall-clock limit in seconds");
  cmd_solve->add_option("--out", solve.out, "Write the solution JSON here");

  VerifyArgs verify;
  auto* cmd_verify = app.add_subcommand("verify", "Recompute and check a solution");
  cmd_verify->add_option("instance", verify.instance_path, "Instance JSON file")->required();
  cmd_verify->add_option("solution", verify.solution_path, "Solution JSON file")->required();

  BenchArgs bench;
  auto* cmd_bench = app.add_subcommand("bench", "Run the benchmark suite");
  cmd_bench->add_option("--nodes", bench.nodes, "Node counts");
  cmd_bench->add_option("--tiers", bench.tiers, "Connectivity tiers");
  cmd_bench->add_option("--seeds", bench.seeds, "Graphs per (nodes, tier)");
  cmd_bench->add_option("--team-sizes", bench.team_sizes, "Team sizes");
  cmd_bench->add_option("--algos", bench.algos, "Algorithms to run");
  cmd_bench->add_option("--timeout", bench.timeout_s, "Per-cell timeout in seconds");
  cmd_bench->add_option("--k", bench.k, "Receding-horizon window length");
  cmd_bench->add_option("--max-uses", bench.max_uses, "Max uses per support pair (ces)");
  cmd_bench->add_option("--risky-count", bench.risky_count, "Risky edges per graph");
  cmd_bench->add_option("--supports-per-edge", bench.supports,
                        "Support nodes per risky edge");
  cmd_bench->add_option("--base-seed", bench.base_seed, "Suite base seed");
  cmd_bench->add_option("--jobs", bench.jobs, "Worker threads (0 = all cores)");
  cmd_bench->add_option("--out", bench.out, "Report directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_gen->parsed()) return run_generate(gen);
    if (cmd_solve->parsed()) return run_solve(solve);
    if (cmd_verify->parsed()) return run_verify(verify);
    if (cmd_bench->parsed()) return run_bench_cmd(bench);
  } catch (const tcgre::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const tcgre::DeadlineExceeded& e) {
    std::cerr << "timeout: " << e.what() << "\n";
    return kExitResource;
  } catch (const tcgre::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return kExitUsage;
}
