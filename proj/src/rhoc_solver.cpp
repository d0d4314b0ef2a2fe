#include "tcgre/rhoc_solver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "tcgre/jsg_solver.hpp"
#include "tcgre/routing.hpp"

namespace tcgre {

namespace {

enum class WindowMode { best_candidate, best_progressing };

// Depth-layered exploration of the window robots' joint sub-states: layer d
// holds the cheapest d-step cost of every state reachable in exactly d steps.
// Every state within the horizon is a candidate segment end (trailing waits
// are free), so the committed segment minimizes, lexicographically:
//   1. g + h_opt(end)   - the optimistic window objective,
//   2. g + h_pess(end)  - the completion price with no further support,
//   3. h_opt(end), then the packed state id.
// Key 2 settles optimistic ties toward progress that stays cheap even if the
// assumed future support never materializes; without it the window may chase
// a phantom-support route or idle at the start state.
std::optional<WindowSegment> window_search(const ProblemInstance& inst,
                                           const std::vector<RobotId>& robots,
                                           const std::vector<NodeId>& locs, int horizon,
                                           const GoalDistances& h_opt,
                                           const GoalDistances& h_pess, WindowMode mode,
                                           std::uint64_t* expanded_counter) {
  const std::uint32_t node_count = static_cast<std::uint32_t>(inst.graph.node_count());
  const int width = static_cast<int>(robots.size());

  auto pack = [&](const std::vector<NodeId>& ls) {
    std::uint32_t key = 0;
    for (NodeId l : ls) key = key * node_count + static_cast<std::uint32_t>(l);
    return key;
  };
  auto unpack = [&](std::uint32_t key) {
    std::vector<NodeId> ls(width);
    for (int i = width - 1; i >= 0; --i) {
      ls[i] = static_cast<NodeId>(key % node_count);
      key /= node_count;
    }
    return ls;
  };
  auto table_sum = [&](const GoalDistances& table, const std::vector<NodeId>& ls) {
    Cost sum = 0;
    for (int i = 0; i < width; ++i) sum += table[robots[i]][ls[i]];
    return sum;
  };
  auto at_goals = [&](const std::vector<NodeId>& ls) {
    for (int i = 0; i < width; ++i) {
      if (ls[i] != inst.goals[robots[i]]) return false;
    }
    return true;
  };

  struct Rec {
    Cost g = kInfiniteCost;
    std::uint32_t parent_state = 0;
    int parent_depth = -1;
  };
  // std::map keeps relaxation order deterministic.
  std::vector<std::map<std::uint32_t, Rec>> layers(horizon + 1);
  const std::uint32_t start_key = pack(locs);
  layers[0][start_key] = {0, 0, -1};

  for (int d = 1; d <= horizon; ++d) {
    for (const auto& [key, rec] : layers[d - 1]) {
      const std::vector<NodeId> here = unpack(key);
      if (at_goals(here)) continue;  // terminal
      if (expanded_counter) ++*expanded_counter;
      for_each_joint_successor(inst, here, [&](const std::vector<NodeId>& to, Cost cost) {
        const Cost ng = rec.g + cost;
        auto [it, inserted] = layers[d].try_emplace(pack(to));
        if (inserted || ng < it->second.g) {
          it->second = {ng, key, d - 1};
        }
        return true;
      });
    }
  }

  // Cheapest arrival per state across depths (shallower wins ties).
  struct Best {
    Cost g = kInfiniteCost;
    int depth = -1;
  };
  std::map<std::uint32_t, Best> best_of;
  for (int d = 0; d <= horizon; ++d) {
    for (const auto& [key, rec] : layers[d]) {
      auto [it, inserted] = best_of.try_emplace(key);
      if (inserted || rec.g < it->second.g) it->second = {rec.g, d};
    }
  }

  const Cost start_h = table_sum(h_opt, locs);
  // Progress means shrinking the optimistic distance sum, completing the
  // window, or delivering some robot to its goal (a supporter stepping off
  // its own goal to enable that still counts).
  auto progressing = [&](const std::vector<NodeId>& ls, bool goal, Cost end_h) {
    if (goal || end_h < start_h) return true;
    for (int i = 0; i < width; ++i) {
      if (ls[i] == inst.goals[robots[i]] && locs[i] != inst.goals[robots[i]]) return true;
    }
    return false;
  };
  // A lone robot gains nothing from waiting inside its own window; committing
  // the empty segment is allowed only for pairs (a partner stuck in another
  // window can make waiting locally optimal).
  const bool allow_waiting = width > 1;

  // A window that can finish the pair does so whenever no alternative has a
  // strictly better guaranteed completion (g plus support-free remainder);
  // with a horizon covering the whole plan this commits the exact optimum.
  Cost min_pess_bound = kInfiniteCost;
  std::optional<std::pair<Cost, std::uint32_t>> goal_candidate;  // (g, state)
  for (const auto& [key, best] : best_of) {
    const std::vector<NodeId> here = unpack(key);
    const bool goal = at_goals(here);
    if (best.depth == 0 && !goal && !allow_waiting) continue;
    min_pess_bound = std::min(min_pess_bound, best.g + table_sum(h_pess, here));
    if (goal) {
      const std::pair<Cost, std::uint32_t> candidate{best.g, key};
      if (!goal_candidate || candidate < *goal_candidate) goal_candidate = candidate;
    }
  }

  using CommitKey = std::tuple<Cost, Cost, Cost, std::uint32_t>;
  std::optional<CommitKey> best_key;
  std::uint32_t best_state = 0;
  int best_depth = -1;
  Cost best_g = 0, best_end_h = 0;
  bool best_goal = false;
  if (goal_candidate && goal_candidate->first <= min_pess_bound) {
    best_state = goal_candidate->second;
    best_depth = best_of.at(best_state).depth;
    best_g = goal_candidate->first;
    best_end_h = table_sum(h_opt, unpack(best_state));
    best_goal = true;
    best_key = CommitKey{};
  } else {
    for (const auto& [key, best] : best_of) {
      const std::vector<NodeId> here = unpack(key);
      const bool goal = at_goals(here);
      if (best.depth == 0 && !goal && !allow_waiting) continue;
      const Cost end_h = table_sum(h_opt, here);
      if (mode == WindowMode::best_progressing && !progressing(here, goal, end_h)) {
        continue;
      }
      const CommitKey candidate{best.g + end_h, best.g + table_sum(h_pess, here), end_h,
                                key};
      if (!best_key || candidate < *best_key) {
        best_key = candidate;
        best_state = key;
        best_depth = best.depth;
        best_g = best.g;
        best_end_h = end_h;
        best_goal = goal;
      }
    }
  }
  if (!best_key) return std::nullopt;

  WindowSegment seg;
  seg.g = best_g;
  seg.end_h = best_end_h;
  seg.reached_goal = best_goal;
  std::uint32_t key = best_state;
  int depth = best_depth;
  while (depth > 0) {
    seg.steps.push_back(unpack(key));
    const Rec& rec = layers[depth].at(key);
    key = rec.parent_state;
    depth = rec.parent_depth;
  }
  std::reverse(seg.steps.begin(), seg.steps.end());
  return seg;
}

}  // namespace

WindowSegment plan_pair_window(const ProblemInstance& inst, RobotId robot_n,
                               RobotId robot_m, NodeId loc_n, NodeId loc_m, int horizon,
                               const GoalDistances& h) {
  const GoalDistances h_pess = all_goal_distances(inst, CostView::pessimistic);
  auto seg = window_search(inst, {robot_n, robot_m}, {loc_n, loc_m}, horizon, h, h_pess,
                           WindowMode::best_candidate, nullptr);
  if (!seg) throw Error("pair window search found no candidate segment");
  return *seg;
}

WindowSegment plan_solo_window(const ProblemInstance& inst, RobotId robot, NodeId loc,
                               int horizon, const GoalDistances& h) {
  const GoalDistances h_pess = all_goal_distances(inst, CostView::pessimistic);
  auto seg = window_search(inst, {robot}, {loc}, horizon, h, h_pess,
                           WindowMode::best_candidate, nullptr);
  if (!seg) throw Error("solo window search found no candidate segment");
  return *seg;
}

namespace {

std::vector<std::vector<RobotId>> make_windows(const ProblemInstance& inst,
                                               const std::vector<RobotId>& on_duty,
                                               const std::vector<NodeId>& locs,
                                               PairingRule rule) {
  std::vector<std::vector<RobotId>> windows;
  if (rule == PairingRule::index_order || on_duty.size() < 2) {
    for (size_t i = 0; i + 1 < on_duty.size(); i += 2) {
      windows.push_back({on_duty[i], on_duty[i + 1]});
    }
    if (on_duty.size() % 2 == 1) windows.push_back({on_duty.back()});
    return windows;
  }

  // nearest_support: pair robots whose optimistic routes share risky edges
  // on which support actually helps.
  std::vector<std::set<int>> wanted(on_duty.size());
  for (size_t i = 0; i < on_duty.size(); ++i) {
    const RobotId n = on_duty[i];
    const PathResult r = shortest_path(inst, locs[n], inst.goals[n], CostView::optimistic);
    if (!r.found) continue;
    for (size_t k = 1; k < r.path.size(); ++k) {
      const int edge = inst.graph.edge_index(r.path[k - 1], r.path[k]);
      if (inst.graph.is_risky(edge) && inst.coordination_gain(edge) > 0) {
        wanted[i].insert(edge);
      }
    }
  }
  std::vector<char> paired(on_duty.size(), 0);
  for (size_t i = 0; i < on_duty.size(); ++i) {
    if (paired[i]) continue;
    size_t partner = i;
    for (size_t j = i + 1; j < on_duty.size(); ++j) {
      if (paired[j]) continue;
      bool shares = false;
      for (int e : wanted[i]) {
        if (wanted[j].count(e)) {
          shares = true;
          break;
        }
      }
      if (shares) {
        partner = j;
        break;
      }
    }
    if (partner == i) {
      for (size_t j = i + 1; j < on_duty.size(); ++j) {
        if (!paired[j]) {
          partner = j;
          break;
        }
      }
    }
    paired[i] = 1;
    if (partner != i) {
      paired[partner] = 1;
      windows.push_back({on_duty[i], on_duty[partner]});
    } else {
      windows.push_back({on_duty[i]});
    }
  }
  return windows;
}

}  // namespace

RhocResult solve_rhoc(const ProblemInstance& inst, const RhocConfig& cfg,
                      const SolveLimits& limits) {
  require_valid(inst);
  if (cfg.horizon < 1) throw ValidationError("rhoc: horizon must be >= 1");
  const int robots = inst.robot_count();
  const int step_cap = cfg.step_cap > 0 ? cfg.step_cap : 4 * inst.graph.node_count();

  const GoalDistances h = all_goal_distances(inst, CostView::optimistic);
  const GoalDistances h_pess = all_goal_distances(inst, CostView::pessimistic);

  RhocResult result;
  Solution& sol = result.solution;
  sol.paths.resize(robots);
  sol.per_robot_cost.assign(robots, 0);
  std::vector<NodeId> locs = inst.starts;
  for (RobotId n = 0; n < robots; ++n) sol.paths[n].push_back(locs[n]);

  // Every robot starts on duty, even one already parked on its goal: it may
  // still need to support its partner, and leaves duty only with it.
  std::vector<RobotId> on_duty(robots);
  for (RobotId n = 0; n < robots; ++n) on_duty[n] = n;

  int global_step = 0;
  while (!on_duty.empty()) {
    ++result.stats.rounds;
    if (result.stats.rounds > static_cast<std::uint64_t>(step_cap)) {
      std::ostringstream os;
      os << "rhoc: step cap of " << step_cap << " rounds exceeded without finishing ("
         << result.stats.windows << " windows, " << result.stats.overrides
         << " overrides, " << on_duty.size() << " robots still on duty)";
      throw ResourceLimitError(os.str());
    }
    limits.enforce_deadline();

    const auto windows = make_windows(inst, on_duty, locs, cfg.pairing);
    std::vector<std::pair<std::vector<RobotId>, WindowSegment>> committed;
    std::vector<RobotId> finished;
    for (const auto& group : windows) {
      ++result.stats.windows;
      std::vector<NodeId> group_locs;
      for (RobotId n : group) group_locs.push_back(locs[n]);

      auto seg = window_search(inst, group, group_locs, cfg.horizon, h, h_pess,
                               WindowMode::best_candidate, &result.stats.states_expanded);
      if (!seg) throw Error("rhoc window search found no candidate segment");
      Cost start_h = 0;
      for (size_t i = 0; i < group.size(); ++i) start_h += h[group[i]][group_locs[i]];
      bool progressing = seg->reached_goal || seg->end_h < start_h;
      if (!progressing && !seg->steps.empty()) {
        for (size_t i = 0; i < group.size(); ++i) {
          if (seg->steps.back()[i] == inst.goals[group[i]] &&
              group_locs[i] != inst.goals[group[i]]) {
            progressing = true;
          }
        }
      }
      if (!progressing) {
        auto alt = window_search(inst, group, group_locs, cfg.horizon, h, h_pess,
                                 WindowMode::best_progressing,
                                 &result.stats.states_expanded);
        if (alt) {
          seg = std::move(alt);
          ++result.stats.overrides;
        }
      }

      for (size_t i = 0; i < group.size(); ++i) {
        if (!seg->steps.empty()) locs[group[i]] = seg->steps.back()[i];
      }
      if (seg->reached_goal) {
        for (RobotId n : group) finished.push_back(n);
      }
      committed.emplace_back(group, std::move(*seg));
    }

    size_t round_len = 0;
    for (const auto& [group, seg] : committed) round_len = std::max(round_len, seg.steps.size());

    // Extend every robot's row across the round; window robots follow their
    // segments, everyone else stays put.
    for (RobotId n = 0; n < robots; ++n) {
      sol.paths[n].resize(sol.paths[n].size() + round_len, sol.paths[n].back());
    }
    for (const auto& [group, seg] : committed) {
      JointState from, to;
      for (size_t t = 0; t < seg.steps.size(); ++t) {
        from.locations.clear();
        for (RobotId n : group) {
          from.locations.push_back(sol.paths[n][global_step + t]);
        }
        to.locations = seg.steps[t];
        for (size_t i = 0; i < group.size(); ++i) {
          sol.paths[group[i]][global_step + t + 1] = seg.steps[t][i];
        }
        MinTransition mt = min_transition_cost(inst, from, to);
        const StepCosts costs = transition_step_costs(inst, from, to, mt.triples);
        for (size_t i = 0; i < group.size(); ++i) {
          sol.per_robot_cost[group[i]] += costs.per_robot[i];
        }
        for (const CoordinationTriple& c : mt.triples) {
          sol.events.push_back({global_step + static_cast<int>(t), group[c.receiver],
                                group[c.supporter], c.edge_u, c.edge_v,
                                from.locations[c.supporter]});
        }
      }
      // Segments shorter than the round leave their robots waiting at the end.
      for (size_t i = 0; i < group.size(); ++i) {
        for (size_t t = seg.steps.size(); t < round_len; ++t) {
          sol.paths[group[i]][global_step + t + 1] = locs[group[i]];
        }
      }
    }
    global_step += static_cast<int>(round_len);

    if (!finished.empty()) {
      std::vector<RobotId> remaining;
      for (RobotId n : on_duty) {
        if (std::find(finished.begin(), finished.end(), n) == finished.end()) {
          remaining.push_back(n);
        }
      }
      on_duty = std::move(remaining);
    }
  }

  std::stable_sort(sol.events.begin(), sol.events.end(),
                   [](const SolutionEvent& a, const SolutionEvent& b) {
                     return a.step < b.step;
                   });
  for (Cost c : sol.per_robot_cost) sol.total_cost += c;
  return result;
}

}  // namespace tcgre
