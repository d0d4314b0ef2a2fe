// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Run with --quick for a reduced grid while developing; the registered ctest
// entry runs the full configuration.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "fixtures.hpp"
#include "tcgre/bench.hpp"
#include "tcgre/ces_solver.hpp"
#include "tcgre/io.hpp"
#include "tcgre/jsg_solver.hpp"
#include "tcgre/oracle.hpp"
#include "tcgre/rhoc_solver.hpp"
#include "tcgre/routing.hpp"

using namespace tcgre;

namespace {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v, int prec = 3) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", prec, v);
  return buf;
}

// Deterministic tiny-instance family (|V| in 4..6, N in 2..3, 1..2 risky
// edges) shared by several criteria.
GeneratorConfig tiny_config(int index) {
  GeneratorConfig cfg;
  cfg.node_count = 4 + index % 3;
  cfg.tier = Tier::moderate;
  cfg.risky_count = 1 + (index / 2) % 2;
  cfg.support_nodes_per_edge = 1 + (index / 4) % 2;
  cfg.robot_count = 2 + index % 2;
  cfg.base_cost = {1, 6};
  cfg.risky_base_cost = {8, 20};
  cfg.reduced_cost = {1, 3};
  cfg.supporter_cost = 1;
  cfg.seed = 1000 + static_cast<std::uint64_t>(index);
  return cfg;
}

double counter_ceiling(int robots, int cs_size) {
  double bound = 1.0;
  for (int i = 0; i < cs_size; ++i) bound *= 2.0 * robots * robots * (i + 1);
  return bound;
}

double fit_loglog_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const size_t n = xs.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    const double lx = std::log(xs[i]);
    const double ly = std::log(ys[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

struct TinyRun {
  ProblemInstance inst;
  Cost oracle_cost = 0;
  std::uint64_t ucs_expanded = 0;
  std::uint64_t astar_expanded = 0;
};

}  // namespace

int main(int argc, char** argv) {
  const bool quick = argc > 1 && std::string(argv[1]) == "--quick";
  const int tiny_count = quick ? 40 : 200;

  std::vector<CriterionResult> results;

  // ---------------------------------------------------------------- 1 & 3
  // Oracle agreement on the tiny suite, plus A* dominance and admissibility.
  std::vector<TinyRun> tiny_runs;
  {
    CriterionResult c1{1, "oracle agreement (oracle == jsg-ucs == jsg-astar)", true, ""};
    CriterionResult c3{3, "A* dominance and heuristic admissibility", true, ""};
    const auto t0 = std::chrono::steady_clock::now();
    int mismatches = 0;
    int dominance_failures = 0;
    int admissibility_failures = 0;
    int sampled_pops = 0;
    for (int i = 0; i < tiny_count; ++i) {
      const ProblemInstance inst = generate_instance(tiny_config(i));
      const OracleResult oracle = oracle_solve(inst);
      if (!oracle.feasible) {
        c1.pass = false;
        c1.detail = "oracle infeasible on tiny instance " + std::to_string(i);
        break;
      }
      const JsgResult ucs = solve_ucs(inst);

      const auto dist = all_goal_distances(inst, CostView::optimistic);
      std::vector<std::vector<NodeId>> pops;
      int pop_tick = 0;
      const JsgResult astar =
          solve_astar(inst, SolveLimits{}, [&](const PopSample& sample) {
            if (++pop_tick % 2 == 0 && pops.size() < 5) pops.push_back(sample.locations);
          });

      if (ucs.solution.total_cost != oracle.cost ||
          astar.solution.total_cost != oracle.cost) {
        ++mismatches;
      }
      if (astar.stats.states_expanded > ucs.stats.states_expanded) ++dominance_failures;

      for (const auto& state : pops) {
        ProblemInstance rest = inst;
        rest.starts.assign(state.begin(), state.end());
        Cost h = 0;
        for (RobotId n = 0; n < inst.robot_count(); ++n) h += dist[n][state[n]];
        const OracleResult remainder = oracle_solve(rest);
        ++sampled_pops;
        if (!remainder.feasible || h > remainder.cost) ++admissibility_failures;
      }
      tiny_runs.push_back({inst, oracle.cost, ucs.stats.states_expanded,
                           astar.stats.states_expanded});
    }
    const double elapsed = seconds_since(t0);
    if (mismatches > 0 || elapsed > 300.0) c1.pass = false;
    if (c1.detail.empty()) {
      c1.detail = std::to_string(tiny_count) + " instances, " +
                  std::to_string(mismatches) + " mismatches, " + fmt(elapsed, 1) + "s";
    }
    if (dominance_failures > 0 || admissibility_failures > 0) c3.pass = false;
    c3.detail = std::to_string(dominance_failures) + " dominance failures, " +
                std::to_string(admissibility_failures) + " of " +
                std::to_string(sampled_pops) + " sampled pops inadmissible";
    results.push_back(c1);
    results.push_back(c3);
  }

  // -------------------------------------------------------------------- 2
  {
    CriterionResult c{2, "T1 golden values (optimal 3, naive 11, ces 3, rhoc 3)", true, ""};
    const auto t0 = std::chrono::steady_clock::now();
    const ProblemInstance t1 = testing::make_t1();
    const Cost oracle_cost = oracle_solve(t1).cost;
    const Cost naive_cost = naive_solve(t1).total_cost;
    const Cost ces_cost = solve_ces(t1).cost;
    RhocConfig rc;
    rc.horizon = 2;
    const Cost rhoc_cost = solve_rhoc(t1, rc).solution.total_cost;
    const double elapsed = seconds_since(t0);
    c.pass = oracle_cost == cost_from_units(3) && naive_cost == cost_from_units(11) &&
             ces_cost == cost_from_units(3) && rhoc_cost == cost_from_units(3) &&
             elapsed < 1.0;
    c.detail = "optimal " + cost_to_string(oracle_cost) + ", naive " +
               cost_to_string(naive_cost) + ", ces " + cost_to_string(ces_cost) +
               ", rhoc(K=2) " + cost_to_string(rhoc_cost) + ", " + fmt(elapsed, 3) + "s";
    results.push_back(c);
  }

  // -------------------------------------------------------------------- 4
  {
    CriterionResult c{4, "CES conditional optimality", true, ""};
    const int wanted = quick ? 10 : 50;
    int found = 0;
    int failures = 0;
    for (int attempt = 0; attempt < 12 * wanted && found < wanted; ++attempt) {
      GeneratorConfig cfg = tiny_config(attempt);
      cfg.seed = 5000 + static_cast<std::uint64_t>(attempt);
      const ProblemInstance inst = generate_instance(cfg);
      const OracleResult oracle = oracle_solve(inst);
      if (!oracle.feasible) continue;
      std::map<std::tuple<NodeId, NodeId, NodeId>, int> uses;
      bool repeat = false;
      for (const SolutionEvent& ev : oracle.solution.events) {
        auto key = std::make_tuple(std::min(ev.edge_u, ev.edge_v),
                                   std::max(ev.edge_u, ev.edge_v), ev.support_node);
        if (++uses[key] > 1) repeat = true;
      }
      if (repeat) continue;
      ++found;
      if (solve_ces(inst, 1).cost != oracle.cost) ++failures;
    }

    const ProblemInstance r2 = testing::make_r2();
    const Cost r2_oracle = oracle_solve(r2).cost;
    const Cost r2_once = solve_ces(r2, 1).cost;
    const Cost r2_twice = solve_ces(r2, 2).cost;
    const bool repeat_ok = r2_once > r2_oracle && r2_twice == r2_oracle;

    c.pass = found >= wanted && failures == 0 && repeat_ok;
    c.detail = std::to_string(found) + " single-use instances, " +
               std::to_string(failures) + " CES misses; repeat-support: oracle " +
               cost_to_string(r2_oracle) + ", ces(1) " + cost_to_string(r2_once) +
               ", ces(2) " + cost_to_string(r2_twice);
    results.push_back(c);
  }

  // ------------------------------------------------------------ 5, 6 & 7
  std::vector<BenchRecord> records;
  {
    CriterionResult c6{6, "feasibility across the full benchmark", true, ""};
    BenchSuiteConfig cfg;  // defaults: 45 graphs x N in {3..7} x 4 methods
    if (quick) {
      cfg.node_counts = {10, 15};
      cfg.tiers = {Tier::sparse, Tier::moderate};
      cfg.seeds_per_type = 1;
      cfg.team_sizes = {3, 4};
      cfg.timeout_s = 10.0;
    }
    cfg.jobs = 0;
    const auto t0 = std::chrono::steady_clock::now();
    records = run_bench(cfg);
    const double elapsed = seconds_since(t0);
    try {
      emit_reports(records, "acceptance_results.csv", "acceptance_plots");
    } catch (const Error& e) {
      std::cerr << "report emission failed: " << e.what() << "\n";
    }

    const size_t expected =
        cfg.node_counts.size() * cfg.tiers.size() * cfg.seeds_per_type *
        cfg.team_sizes.size() * cfg.algorithms.size();
    size_t completed = 0, invalid = 0;
    for (const BenchRecord& r : records) {
      if (r.completed) {
        ++completed;
        if (!r.valid) ++invalid;
      }
    }
    c6.pass = records.size() == expected && invalid == 0;
    c6.detail = std::to_string(records.size()) + " cells (" +
                std::to_string(completed) + " completed, " +
                std::to_string(invalid) + " invalid solutions), " + fmt(elapsed, 0) + "s";
    results.push_back(c6);

    CriterionResult c5{5, "CES enumeration counter bound", true, ""};
    std::uint64_t checked = 0, violations5 = 0;
    for (const BenchRecord& r : records) {
      if (r.algo != Algo::ces) continue;
      ++checked;
      if (static_cast<double>(r.cost_calcs) >
          counter_ceiling(r.descriptor.robot_count, r.descriptor.support_pair_count)) {
        ++violations5;
      }
    }
    c5.pass = violations5 == 0 && checked > 0;
    c5.detail = std::to_string(checked) + " ces runs, " + std::to_string(violations5) +
                " bound violations";
    results.push_back(c5);

    CriterionResult c7{7, "trend: JSG failures grow with N; CES/RHOC complete and beat naive",
                       true, ""};
    std::ostringstream detail;
    const std::vector<int>& team_sizes = cfg.team_sizes;
    for (Algo algo : {Algo::jsg_ucs, Algo::jsg_astar}) {
      std::vector<double> frac;
      for (int team : team_sizes) {
        int total = 0, failed = 0;
        for (const BenchRecord& r : records) {
          if (r.algo != algo || r.descriptor.robot_count != team) continue;
          ++total;
          failed += r.timeout ? 1 : 0;
        }
        frac.push_back(total > 0 ? static_cast<double>(failed) / total : 0.0);
      }
      detail << algo_name(algo) << " fail fractions:";
      for (double f : frac) detail << ' ' << fmt(f, 2);
      detail << "; ";
      for (size_t i = 1; i < frac.size(); ++i) {
        if (frac[i] < frac[i - 1] - 1e-12) c7.pass = false;
      }
      if (!(frac.back() > frac.front())) c7.pass = false;
    }
    for (Algo algo : {Algo::ces, Algo::rhoc_astar}) {
      int total = 0, completed7 = 0, worse_than_naive = 0;
      for (const BenchRecord& r : records) {
        if (r.algo != algo) continue;
        ++total;
        if (!r.completed) continue;
        ++completed7;
        if (!r.naive_opt || *r.naive_opt < 1.0 - 1e-9) ++worse_than_naive;
      }
      const double completion = total > 0 ? static_cast<double>(completed7) / total : 0.0;
      detail << algo_name(algo) << " completion " << fmt(completion, 3) << ", "
             << worse_than_naive << " cells worse than naive; ";
      if (completion < 0.9 || worse_than_naive > 0) c7.pass = false;
    }
    c7.detail = detail.str();
    results.push_back(c7);
  }

  // -------------------------------------------------------------------- 8
  {
    CriterionResult c{8, "CES runtime scaling (power law in N; blow-up in |CS|)", true, ""};
    SolveLimits ces_limits;
    ces_limits.max_cost_calculations = 200'000'000;

    // Part A: |CS| fixed at 2, runtime vs team size.
    std::vector<double> ns, ts;
    for (int team : {3, 4, 5, 6, 7}) {
      double total = 0;
      int samples = 0;
      for (std::uint64_t seed : {11, 12, 13}) {
        GeneratorConfig g;
        g.node_count = 15;
        g.tier = Tier::moderate;
        g.risky_count = 2;
        g.support_nodes_per_edge = 1;
        g.robot_count = team;
        g.seed = seed;
        const ProblemInstance inst = generate_instance(g);
        double best = 1e18;
        for (int rep = 0; rep < (quick ? 2 : 4); ++rep) {
          const auto t0 = std::chrono::steady_clock::now();
          solve_ces(inst, 1, ces_limits);
          best = std::min(best, seconds_since(t0));
        }
        total += best;
        ++samples;
      }
      ns.push_back(team);
      ts.push_back(total / samples);
    }
    const double slope = fit_loglog_slope(ns, ts);

    // Part B: N fixed at 3, |CS| raised from 2 to 5.
    double t_cs2 = 0, t_cs5 = 0;
    for (std::uint64_t seed : {21, 22, 23}) {
      for (int cs : {2, 5}) {
        GeneratorConfig g;
        g.node_count = 10;
        g.tier = Tier::sparse;
        g.risky_count = cs;
        g.support_nodes_per_edge = 1;
        g.robot_count = 3;
        g.seed = seed;
        const ProblemInstance inst = generate_instance(g);
        const auto t0 = std::chrono::steady_clock::now();
        const CesResult r = solve_ces(inst, 1, ces_limits);
        const double dt = seconds_since(t0);
        if (static_cast<double>(r.counters.cost_calculations) >
            counter_ceiling(3, cs)) {
          c.pass = false;
          c.detail = "counter bound violated in the focused run";
        }
        (cs == 2 ? t_cs2 : t_cs5) += dt;
      }
    }
    const double ratio = t_cs5 / std::max(t_cs2, 1e-9);
    if (!(slope < 3.5) || !(ratio >= 10.0)) c.pass = false;
    if (c.detail.empty()) {
      c.detail = "fitted exponent " + fmt(slope, 2) + " (< 3.5), |CS| 2->5 runtime x" +
                 fmt(ratio, 1);
    }
    results.push_back(c);
  }

  // -------------------------------------------------------------------- 9
  {
    CriterionResult c{9, "RHOC horizon behavior", true, ""};
    std::vector<double> mean_runtime;
    for (int k : {1, 2, 3, 4}) {
      double total = 0;
      int cells = 0;
      for (int nodes : quick ? std::vector<int>{10, 15} : std::vector<int>{10, 15, 20, 25, 30}) {
        for (std::uint64_t seed : {31, 32, 33}) {
          GeneratorConfig g;
          g.node_count = nodes;
          g.tier = Tier::moderate;
          g.risky_count = 2;
          g.support_nodes_per_edge = 1;
          g.robot_count = 4;
          g.seed = seed;
          const ProblemInstance inst = generate_instance(g);
          RhocConfig rc;
          rc.horizon = k;
          double best = 1e18;
          for (int rep = 0; rep < 2; ++rep) {
            const auto t0 = std::chrono::steady_clock::now();
            solve_rhoc(inst, rc);
            best = std::min(best, seconds_since(t0));
          }
          total += best;
          ++cells;
        }
      }
      mean_runtime.push_back(total / cells);
    }
    bool monotone = true;
    for (size_t i = 1; i < mean_runtime.size(); ++i) {
      if (mean_runtime[i] < mean_runtime[i - 1]) monotone = false;
    }

    int exact_failures = 0, two_robot = 0;
    for (const TinyRun& run : tiny_runs) {
      if (run.inst.robot_count() != 2) continue;
      ++two_robot;
      RhocConfig rc;
      rc.horizon = 2 * run.inst.graph.node_count();
      const RhocResult r = solve_rhoc(run.inst, rc);
      if (r.solution.total_cost != run.oracle_cost) ++exact_failures;
    }
    c.pass = monotone && exact_failures == 0 && two_robot > 0;
    std::ostringstream detail;
    detail << "mean runtime by K:";
    for (double t : mean_runtime) detail << ' ' << fmt(t * 1e3, 2) << "ms";
    detail << (monotone ? " (monotone)" : " (NOT monotone)") << "; K=2|V| exact on "
           << (two_robot - exact_failures) << "/" << two_robot << " two-robot instances";
    c.detail = detail.str();
    results.push_back(c);
  }

  // ------------------------------------------------------------------- 10
  {
    CriterionResult c{10, "generator and format determinism", true, ""};
    GeneratorConfig g;
    g.node_count = 10;
    g.tier = Tier::sparse;
    g.robot_count = 3;
    g.seed = 7;
    const std::string file_a = write_instance(generate_instance(g));
    const std::string file_b = write_instance(generate_instance(g));
    const ProblemInstance reread = read_instance(file_a);
    const bool instance_ok = file_a == file_b && reread == generate_instance(g) &&
                             write_instance(reread) == file_a;

    const ProblemInstance t1 = testing::make_t1();
    const Solution sol = solve_astar(t1).solution;
    const Solution back = read_solution(write_solution(sol));
    const bool solution_ok =
        back == sol && write_solution(back) == write_solution(sol);

    c.pass = instance_ok && solution_ok;
    c.detail = std::string("instance bytes ") + (instance_ok ? "stable" : "UNSTABLE") +
               ", solution round-trip " + (solution_ok ? "stable" : "UNSTABLE");
    results.push_back(c);
  }

  std::sort(results.begin(), results.end(),
            [](const CriterionResult& a, const CriterionResult& b) { return a.id < b.id; });
  bool all_pass = true;
  for (const CriterionResult& r : results) {
    all_pass = all_pass && r.pass;
    std::cout << (r.pass ? "[PASS]" : "[FAIL]") << " criterion " << r.id << ": "
              << r.title << " — " << r.detail << "\n";
  }
  std::cout << (all_pass ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << "\n";
  return all_pass ? 0 : 1;
}
