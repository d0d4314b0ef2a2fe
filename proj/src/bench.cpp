#include "tcgre/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>
#include <thread>

#include "tcgre/ces_solver.hpp"
#include "tcgre/io.hpp"
#include "tcgre/jsg_solver.hpp"
#include "tcgre/oracle.hpp"
#include "tcgre/rhoc_solver.hpp"
#include "tcgre/routing.hpp"

namespace tcgre {

const char* algo_name(Algo algo) {
  switch (algo) {
    case Algo::jsg_ucs: return "jsg-ucs";
    case Algo::jsg_astar: return "jsg-astar";
    case Algo::ces: return "ces";
    case Algo::rhoc_astar: return "rhoc-astar";
    case Algo::naive: return "naive";
    case Algo::oracle: return "oracle";
  }
  return "?";
}

std::optional<Algo> algo_from_name(const std::string& name) {
  for (Algo a : {Algo::jsg_ucs, Algo::jsg_astar, Algo::ces, Algo::rhoc_astar,
                 Algo::naive, Algo::oracle}) {
    if (name == algo_name(a)) return a;
  }
  return std::nullopt;
}

std::uint64_t suite_seed(const BenchSuiteConfig& cfg, int node_count, Tier tier, int rep) {
  return cfg.base_seed * 1'000'000 + static_cast<std::uint64_t>(node_count) * 1'000 +
         static_cast<std::uint64_t>(tier) * 100 + static_cast<std::uint64_t>(rep);
}

GeneratorConfig suite_generator_config(const BenchSuiteConfig& cfg, int node_count,
                                       Tier tier, int rep, int team_size) {
  GeneratorConfig g;
  g.node_count = node_count;
  g.tier = tier;
  g.risky_count = cfg.risky_count;
  g.support_nodes_per_edge = cfg.support_nodes_per_edge;
  g.robot_count = team_size;
  g.supporter_cost = cfg.supporter_cost;
  g.seed = suite_seed(cfg, node_count, tier, rep);
  return g;
}

namespace {

struct CellOutcome {
  bool completed = false;
  Solution solution;
  std::uint64_t expanded = 0;
  std::uint64_t cost_calcs = 0;
};

CellOutcome run_algorithm(Algo algo, const ProblemInstance& inst,
                          const BenchSuiteConfig& cfg) {
  SolveLimits limits = cfg.cell_limits;
  if (cfg.timeout_s > 0) {
    limits.deadline = std::chrono::steady_clock::now() +
                      std::chrono::microseconds(
                          static_cast<std::int64_t>(cfg.timeout_s * 1e6));
  }
  CellOutcome out;
  try {
    switch (algo) {
      case Algo::naive:
        out.solution = naive_solve(inst);
        break;
      case Algo::jsg_ucs: {
        JsgResult r = solve_ucs(inst, limits);
        out.solution = std::move(r.solution);
        out.expanded = r.stats.states_expanded;
        break;
      }
      case Algo::jsg_astar: {
        JsgResult r = solve_astar(inst, limits);
        out.solution = std::move(r.solution);
        out.expanded = r.stats.states_expanded;
        break;
      }
      case Algo::ces: {
        CesResult r = solve_ces(inst, cfg.ces_max_uses, limits);
        out.solution = std::move(r.solution);
        out.cost_calcs = r.counters.cost_calculations;
        break;
      }
      case Algo::rhoc_astar: {
        RhocConfig rc;
        rc.horizon = cfg.rhoc_horizon;
        RhocResult r = solve_rhoc(inst, rc, limits);
        out.solution = std::move(r.solution);
        out.expanded = r.stats.states_expanded;
        break;
      }
      case Algo::oracle: {
        OracleResult r = oracle_solve(inst, OracleLimits{}, limits);
        if (!r.feasible) return out;
        out.solution = std::move(r.solution);
        break;
      }
    }
  } catch (const Error&) {
    return out;  // deadline, cap, or refusal: an absent data point
  }
  out.completed = true;
  return out;
}

struct Group {
  int node_count = 0;
  Tier tier = Tier::sparse;
  int rep = 0;
  int team_size = 0;
};

}  // namespace

std::vector<BenchRecord> run_bench(const BenchSuiteConfig& cfg) {
  if (cfg.algorithms.empty()) throw Error("run_bench: no algorithms selected");
  if (cfg.node_counts.empty() || cfg.tiers.empty() || cfg.team_sizes.empty() ||
      cfg.seeds_per_type < 1) {
    throw Error("run_bench: empty suite");
  }

  std::vector<Group> groups;
  for (int nodes : cfg.node_counts) {
    for (Tier tier : cfg.tiers) {
      for (int rep = 0; rep < cfg.seeds_per_type; ++rep) {
        for (int team : cfg.team_sizes) {
          groups.push_back({nodes, tier, rep, team});
        }
      }
    }
  }

  std::vector<std::vector<BenchRecord>> group_records(groups.size());
  std::atomic<size_t> next{0};

  auto worker = [&]() {
    while (true) {
      const size_t g = next.fetch_add(1);
      if (g >= groups.size()) return;
      const Group& grp = groups[g];
      const GeneratorConfig gen = suite_generator_config(cfg, grp.node_count, grp.tier,
                                                         grp.rep, grp.team_size);
      const ProblemInstance inst = generate_instance(gen);
      const InstanceDescriptor desc = describe_instance(inst, grp.tier, gen.seed);

      const Solution naive = naive_solve(inst);

      std::vector<BenchRecord>& records = group_records[g];
      for (Algo algo : cfg.algorithms) {
        BenchRecord rec;
        rec.algo = algo;
        rec.descriptor = desc;
        const auto t0 = std::chrono::steady_clock::now();
        CellOutcome out = run_algorithm(algo, inst, cfg);
        const auto t1 = std::chrono::steady_clock::now();
        rec.runtime_s = std::chrono::duration<double>(t1 - t0).count();
        rec.completed = out.completed;
        rec.timeout = !out.completed;
        rec.expanded = out.expanded;
        rec.cost_calcs = out.cost_calcs;
        if (out.completed) {
          rec.cost = out.solution.total_cost;
          rec.valid = validate_solution(inst, out.solution).ok();
          rec.naive_opt = cost_to_double(naive.total_cost) / cost_to_double(rec.cost);
        }
        records.push_back(rec);
      }
      // Optimal reference: any finished provably-optimal method in this group.
      std::optional<Cost> reference;
      for (const BenchRecord& rec : records) {
        if (!rec.completed) continue;
        if (rec.algo == Algo::jsg_ucs || rec.algo == Algo::jsg_astar ||
            rec.algo == Algo::oracle) {
          reference = reference ? std::min(*reference, rec.cost) : rec.cost;
        }
      }
      if (reference) {
        for (BenchRecord& rec : records) {
          if (rec.completed) {
            rec.true_opt = cost_to_double(*reference) / cost_to_double(rec.cost);
          }
        }
      }
    }
  };

  int jobs = cfg.jobs > 0 ? cfg.jobs
                          : static_cast<int>(std::thread::hardware_concurrency());
  if (jobs < 1) jobs = 1;
  jobs = std::min<int>(jobs, static_cast<int>(groups.size()));
  std::vector<std::thread> threads;
  threads.reserve(jobs);
  for (int i = 0; i < jobs; ++i) threads.emplace_back(worker);
  for (auto& t : threads) t.join();

  std::vector<BenchRecord> out;
  for (auto& records : group_records) {
    for (BenchRecord& rec : records) out.push_back(std::move(rec));
  }
  return out;
}

namespace {

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::string records_to_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream os;
  os << "algo,nodes,edges,risky,support_pairs,robots,tier,seed,cost,true_opt,"
        "naive_opt,runtime_s,timeout,expanded,cost_calcs\n";
  for (const BenchRecord& r : records) {
    os << algo_name(r.algo) << ',' << r.descriptor.node_count << ','
       << r.descriptor.edge_count << ',' << r.descriptor.risky_count << ','
       << r.descriptor.support_pair_count << ',' << r.descriptor.robot_count << ','
       << tier_name(r.descriptor.tier) << ',' << r.descriptor.seed << ',';
    if (r.completed) os << cost_to_string(r.cost);
    os << ',';
    if (r.true_opt) os << format_double(*r.true_opt);
    os << ',';
    if (r.naive_opt) os << format_double(*r.naive_opt);
    os << ',' << format_double(r.runtime_s) << ',' << (r.timeout ? 1 : 0) << ','
       << r.expanded << ',' << r.cost_calcs << '\n';
  }
  return os.str();
}

void write_csv(const std::vector<BenchRecord>& records, const std::string& path) {
  if (records.empty()) throw Error("write_csv: no records");
  write_text_file(path, records_to_csv(records));
}

namespace {

struct Series {
  Algo algo;
  const char* color;
};

constexpr Series kSeries[] = {
    {Algo::jsg_ucs, "rgb(128,0,129)"},  {Algo::jsg_astar, "rgb(9,5,255)"},
    {Algo::ces, "rgb(244,1,4)"},        {Algo::rhoc_astar, "rgb(44,128,0)"},
    {Algo::naive, "rgb(241,16,255)"},   {Algo::oracle, "rgb(90,90,90)"},
};

const char* series_color(Algo algo) {
  for (const Series& s : kSeries) {
    if (s.algo == algo) return s.color;
  }
  return "rgb(0,0,0)";
}

std::string scatter_svg(const std::vector<BenchRecord>& records, bool use_true_opt,
                        const std::string& title) {
  const double width = 760, height = 520;
  const double ml = 70, mr = 160, mt = 40, mb = 55;
  const double pw = width - ml - mr, ph = height - mt - mb;

  struct Point {
    double x, y;
    Algo algo;
  };
  std::vector<Point> points;
  double min_t = 1e9, max_t = 1e-9, max_y = 1.0;
  for (const BenchRecord& r : records) {
    if (!r.completed) continue;
    const std::optional<double>& metric = use_true_opt ? r.true_opt : r.naive_opt;
    if (!metric) continue;
    const double t = std::max(r.runtime_s, 1e-7);
    points.push_back({t, *metric, r.algo});
    min_t = std::min(min_t, t);
    max_t = std::max(max_t, t);
    max_y = std::max(max_y, *metric);
  }
  if (points.empty()) {
    min_t = 1e-4;
    max_t = 1.0;
  }
  const double lo = std::floor(std::log10(min_t));
  const double hi = std::ceil(std::log10(max_t) + 1e-12);
  const double span = std::max(hi - lo, 1.0);
  const double y_top = max_y * 1.05;

  auto x_of = [&](double t) { return ml + (std::log10(t) - lo) / span * pw; };
  auto y_of = [&](double y) { return mt + ph - y / y_top * ph; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
     << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << ml << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">"
     << title << "</text>\n";

  // grid + axes
  for (int d = 0; d <= static_cast<int>(span); ++d) {
    const double t = std::pow(10.0, lo + d);
    const double x = x_of(t);
    os << "<line x1=\"" << x << "\" y1=\"" << mt << "\" x2=\"" << x << "\" y2=\""
       << mt + ph << "\" stroke=\"#dddddd\"/>\n";
    os << "<text x=\"" << x << "\" y=\"" << mt + ph + 20
       << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">1e"
       << static_cast<int>(lo) + d << "</text>\n";
  }
  const int y_ticks = 5;
  for (int i = 0; i <= y_ticks; ++i) {
    const double y = y_top * i / y_ticks;
    const double yy = y_of(y);
    os << "<line x1=\"" << ml << "\" y1=\"" << yy << "\" x2=\"" << ml + pw << "\" y2=\""
       << yy << "\" stroke=\"#dddddd\"/>\n";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", y);
    os << "<text x=\"" << ml - 8 << "\" y=\"" << yy + 4
       << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">" << buf
       << "</text>\n";
  }
  os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\""
     << ph << "\" fill=\"none\" stroke=\"#333333\"/>\n";
  os << "<text x=\"" << ml + pw / 2 << "\" y=\"" << height - 12
     << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">"
        "runtime [s]</text>\n";
  os << "<text x=\"18\" y=\"" << mt + ph / 2
     << "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
        "transform=\"rotate(-90 18 "
     << mt + ph / 2 << ")\">" << (use_true_opt ? "true optimality" : "naive optimality")
     << "</text>\n";

  for (const Point& p : points) {
    os << "<circle cx=\"" << x_of(p.x) << "\" cy=\"" << y_of(p.y)
       << "\" r=\"3\" fill=\"" << series_color(p.algo) << "\" fill-opacity=\"0.7\"/>\n";
  }

  // legend
  double ly = mt + 10;
  for (const Series& s : kSeries) {
    bool present = false;
    for (const Point& p : points) {
      if (p.algo == s.algo) {
        present = true;
        break;
      }
    }
    if (!present) continue;
    os << "<circle cx=\"" << ml + pw + 18 << "\" cy=\"" << ly << "\" r=\"4\" fill=\""
       << s.color << "\"/>\n";
    os << "<text x=\"" << ml + pw + 28 << "\" y=\"" << ly + 4
       << "\" font-family=\"sans-serif\" font-size=\"12\">" << algo_name(s.algo)
       << "</text>\n";
    ly += 18;
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace

void write_scatter_plots(const std::vector<BenchRecord>& records,
                         const std::string& directory) {
  if (records.empty()) throw Error("write_scatter_plots: no records");
  std::filesystem::create_directories(directory);
  write_text_file(directory + "/true_optimality_vs_time.svg",
                  scatter_svg(records, true, "True optimality vs. runtime"));
  write_text_file(directory + "/naive_optimality_vs_time.svg",
                  scatter_svg(records, false, "Naive optimality vs. runtime"));
}

void emit_reports(const std::vector<BenchRecord>& records, const std::string& csv_path,
                  const std::string& plot_directory) {
  const auto parent = std::filesystem::path(csv_path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  write_csv(records, csv_path);
  write_scatter_plots(records, plot_directory);
}

}  // namespace tcgre
