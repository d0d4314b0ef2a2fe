#include "tcgre/jsg_solver.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

#include "tcgre/matching.hpp"
#include "tcgre/routing.hpp"

namespace tcgre {

namespace {

struct MoveProfile {
  Cost base_sum = 0;
  std::vector<std::pair<RobotId, int>> receivers;  // (robot, risky edge index)
  std::vector<RobotId> stayers;
};

bool profile_moves(const ProblemInstance& inst, const std::vector<NodeId>& from,
                   const std::vector<NodeId>& to, MoveProfile& out) {
  out.base_sum = 0;
  out.receivers.clear();
  out.stayers.clear();
  for (RobotId n = 0; n < static_cast<RobotId>(from.size()); ++n) {
    if (from[n] == to[n]) {
      out.stayers.push_back(n);
      continue;
    }
    const int edge = inst.graph.edge_index(from[n], to[n]);
    if (edge < 0) return false;
    out.base_sum += inst.graph.base_cost(edge);
    if (inst.graph.is_risky(edge)) out.receivers.push_back({n, edge});
  }
  return true;
}

// Resolves the coordination assignment for one move set. Fills `triples` only
// when a caller wants the witness.
Cost assignment_cost(const ProblemInstance& inst, const std::vector<NodeId>& from,
                     const MoveProfile& profile, std::vector<CoordinationTriple>* triples,
                     ExpansionStats* stats) {
  if (profile.receivers.empty() || profile.stayers.empty()) return profile.base_sum;

  std::vector<std::vector<Cost>> weight;
  bool any_pair = false;
  for (const auto& [r, edge] : profile.receivers) {
    const Cost gain = inst.coordination_gain(edge);
    std::vector<Cost> row(profile.stayers.size(), 0);
    if (gain > 0) {
      const RiskyInfo* info = inst.graph.risky(edge);
      for (size_t s = 0; s < profile.stayers.size(); ++s) {
        const NodeId loc = from[profile.stayers[s]];
        if (std::find(info->support_nodes.begin(), info->support_nodes.end(), loc) !=
            info->support_nodes.end()) {
          row[s] = gain;
          any_pair = true;
        }
      }
    }
    weight.push_back(std::move(row));
  }
  if (!any_pair) return profile.base_sum;

  if (stats) ++stats->matchings_solved;
  const AssignmentResult assignment = max_weight_assignment(weight);
  if (triples) {
    for (size_t i = 0; i < profile.receivers.size(); ++i) {
      if (assignment.pair_of[i] < 0) continue;
      const auto& [r, edge] = profile.receivers[i];
      (void)edge;
      CoordinationTriple c;
      c.receiver = r;
      c.supporter = profile.stayers[assignment.pair_of[i]];
      c.edge_u = from[r];
      c.edge_v = -1;  // filled by caller, which knows `to`
      triples->push_back(c);
    }
  }
  return profile.base_sum - assignment.total_weight;
}

}  // namespace

MinTransition min_transition_cost(const ProblemInstance& inst, const JointState& from,
                                  const JointState& to) {
  MoveProfile profile;
  if (!profile_moves(inst, from.locations, to.locations, profile)) {
    throw ValidationError("min_transition_cost: some robot moves along a non-edge");
  }
  MinTransition result;
  result.cost = assignment_cost(inst, from.locations, profile, &result.triples, nullptr);
  for (CoordinationTriple& c : result.triples) c.edge_v = to.locations[c.receiver];
  return result;
}

void for_each_joint_successor(const ProblemInstance& inst,
                              const std::vector<NodeId>& locs, const SuccessorFn& fn,
                              ExpansionStats* stats) {
  const int robots = static_cast<int>(locs.size());
  std::vector<std::vector<NodeId>> options(robots);
  for (RobotId n = 0; n < robots; ++n) {
    options[n].push_back(locs[n]);
    for (const Graph::Neighbor& nb : inst.graph.neighbors(locs[n])) {
      options[n].push_back(nb.node);
    }
  }

  std::vector<size_t> pick(robots, 0);
  std::vector<NodeId> to(robots);
  MoveProfile profile;
  while (true) {
    bool all_stay = true;
    for (RobotId n = 0; n < robots; ++n) {
      to[n] = options[n][pick[n]];
      if (to[n] != locs[n]) all_stay = false;
    }
    if (!all_stay) {
      profile_moves(inst, locs, to, profile);
      const Cost cost = assignment_cost(inst, locs, profile, nullptr, stats);
      if (!fn(to, cost)) return;
    }
    int n = 0;
    for (; n < robots; ++n) {
      if (++pick[n] < options[n].size()) break;
      pick[n] = 0;
    }
    if (n == robots) break;
  }
}

std::vector<JointTransition> expand(const ProblemInstance& inst, const JointState& s) {
  std::vector<JointTransition> out;
  for_each_joint_successor(inst, s.locations, [&](const std::vector<NodeId>& to, Cost) {
    JointTransition tr;
    tr.from = s;
    tr.to.locations = to;
    MinTransition mt = min_transition_cost(inst, s, tr.to);
    tr.cost = mt.cost;
    tr.coordination = std::move(mt.triples);
    out.push_back(std::move(tr));
    return true;
  });
  return out;
}

namespace {

struct StateRec {
  Cost g = kInfiniteCost;
  std::uint64_t parent = 0;
  bool closed = false;
};

struct HeapEntry {
  Cost f;
  Cost h;
  std::uint64_t key;

  bool operator>(const HeapEntry& other) const {
    if (f != other.f) return f > other.f;
    if (h != other.h) return h > other.h;
    return key > other.key;
  }
};

std::uint64_t pack_state(const std::vector<NodeId>& locs, std::uint64_t node_count) {
  std::uint64_t key = 0;
  for (NodeId l : locs) key = key * node_count + static_cast<std::uint64_t>(l);
  return key;
}

std::vector<NodeId> unpack_state(std::uint64_t key, std::uint64_t node_count, int robots) {
  std::vector<NodeId> locs(robots);
  for (int n = robots - 1; n >= 0; --n) {
    locs[n] = static_cast<NodeId>(key % node_count);
    key /= node_count;
  }
  return locs;
}

bool exceeds(std::uint64_t count, std::uint64_t cap) { return cap != 0 && count > cap; }

JsgResult solve_jsg(const ProblemInstance& inst, bool use_heuristic,
                    const SolveLimits& limits, const PopObserver& observer) {
  require_valid(inst);
  const int robots = inst.robot_count();
  const std::uint64_t node_count = static_cast<std::uint64_t>(inst.graph.node_count());

  // Packed joint-state keys must fit 63 bits.
  std::uint64_t capacity = 1;
  for (int n = 0; n < robots; ++n) {
    if (capacity > (std::uint64_t{1} << 62) / node_count) {
      throw ResourceLimitError("joint state space exceeds packed-key capacity");
    }
    capacity *= node_count;
  }

  std::vector<std::vector<Cost>> h_table;
  if (use_heuristic) h_table = all_goal_distances(inst, CostView::optimistic);
  auto h_of = [&](const std::vector<NodeId>& locs) -> Cost {
    if (!use_heuristic) return 0;
    Cost h = 0;
    for (RobotId n = 0; n < robots; ++n) h += h_table[n][locs[n]];
    return h;
  };

  JsgResult result;
  ExpansionStats& stats = result.stats;

  const std::uint64_t start_key = pack_state(inst.starts, node_count);
  const std::uint64_t goal_key = pack_state(inst.goals, node_count);

  if (start_key == goal_key) {
    result.solution.paths.resize(robots);
    for (RobotId n = 0; n < robots; ++n) result.solution.paths[n] = {inst.starts[n]};
    result.solution.per_robot_cost.assign(robots, 0);
    stats.states_generated = 1;
    return result;
  }

  std::unordered_map<std::uint64_t, StateRec> states;
  std::priority_queue<HeapEntry, std::vector<HeapEntry>, std::greater<HeapEntry>> open;

  states[start_key] = {0, start_key, false};
  stats.states_generated = 1;
  open.push({h_of(inst.starts), h_of(inst.starts), start_key});

  while (!open.empty()) {
    const HeapEntry top = open.top();
    open.pop();
    auto& rec = states[top.key];
    const Cost g = top.f - top.h;
    if (g != rec.g) continue;  // stale heap entry

    if (observer) observer({unpack_state(top.key, node_count, robots), g, top.h});

    if (top.key == goal_key) {
      // Reconstruct the state chain, then re-derive costs and assignments.
      std::vector<std::uint64_t> chain{top.key};
      while (chain.back() != start_key) chain.push_back(states[chain.back()].parent);
      std::reverse(chain.begin(), chain.end());

      Solution& sol = result.solution;
      sol.paths.resize(robots);
      sol.per_robot_cost.assign(robots, 0);
      JointState prev{unpack_state(chain[0], node_count, robots)};
      for (RobotId n = 0; n < robots; ++n) sol.paths[n].push_back(prev.locations[n]);
      for (size_t i = 1; i < chain.size(); ++i) {
        JointState cur{unpack_state(chain[i], node_count, robots)};
        MinTransition mt = min_transition_cost(inst, prev, cur);
        const StepCosts costs = transition_step_costs(inst, prev, cur, mt.triples);
        for (RobotId n = 0; n < robots; ++n) {
          sol.paths[n].push_back(cur.locations[n]);
          sol.per_robot_cost[n] += costs.per_robot[n];
        }
        for (const CoordinationTriple& c : mt.triples) {
          sol.events.push_back({static_cast<int>(i) - 1, c.receiver, c.supporter,
                                c.edge_u, c.edge_v, prev.locations[c.supporter]});
        }
        sol.total_cost += costs.total;
        prev = std::move(cur);
      }
      return result;
    }

    rec.closed = true;
    ++stats.states_expanded;
    if (exceeds(stats.states_expanded, limits.max_expanded)) {
      throw ResourceLimitError("jsg solver expanded more than " +
                               std::to_string(limits.max_expanded) + " states");
    }
    if (stats.states_expanded % 128 == 0) limits.enforce_deadline();

    const std::vector<NodeId> locs = unpack_state(top.key, node_count, robots);
    std::uint64_t successor_tick = 0;
    for_each_joint_successor(
        inst, locs,
        [&](const std::vector<NodeId>& to, Cost cost) {
          if (++successor_tick % 8192 == 0) limits.enforce_deadline();
          const std::uint64_t nk = pack_state(to, node_count);
          const Cost ng = g + cost;
          auto [it, inserted] = states.try_emplace(nk);
          if (inserted) {
            ++stats.states_generated;
            if (exceeds(stats.states_generated, limits.max_states)) {
              throw ResourceLimitError("jsg solver generated more than " +
                                       std::to_string(limits.max_states) + " states");
            }
          } else if (ng >= it->second.g) {
            return true;
          } else if (it->second.closed) {
            // Exact costs + consistent heuristic: a closed state cannot improve.
            throw Error("jsg solver attempted to reopen a closed state");
          }
          it->second.g = ng;
          it->second.parent = top.key;
          const Cost h = h_of(to);
          open.push({ng + h, h, nk});
          stats.peak_frontier = std::max<std::uint64_t>(stats.peak_frontier, open.size());
          if (exceeds(open.size(), 8 * limits.max_states)) {
            throw ResourceLimitError("jsg solver frontier exceeded its bound");
          }
          return true;
        },
        &stats);
  }
  throw Error("jsg solver: goal unreachable");
}

}  // namespace

JsgResult solve_ucs(const ProblemInstance& inst, const SolveLimits& limits,
                    const PopObserver& observer) {
  return solve_jsg(inst, false, limits, observer);
}

JsgResult solve_astar(const ProblemInstance& inst, const SolveLimits& limits,
                      const PopObserver& observer) {
  return solve_jsg(inst, true, limits, observer);
}

}  // namespace tcgre
