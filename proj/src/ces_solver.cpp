#include "tcgre/ces_solver.hpp"

#include <algorithm>
#include <cassert>

namespace tcgre {

std::vector<SupportPair> build_coordination_set(const ProblemInstance& inst) {
  std::vector<SupportPair> out;
  for (const RiskySpec& r : inst.graph.risky_specs()) {
    SupportPair sp;
    sp.edge_u = std::min(r.u, r.v);
    sp.edge_v = std::max(r.u, r.v);
    std::vector<NodeId> supports = r.info.support_nodes;
    std::sort(supports.begin(), supports.end());
    for (NodeId s : supports) {
      sp.support_node = s;
      out.push_back(sp);
    }
  }
  std::sort(out.begin(), out.end(), [](const SupportPair& a, const SupportPair& b) {
    return std::tie(a.edge_u, a.edge_v, a.support_node) <
           std::tie(b.edge_u, b.edge_v, b.support_node);
  });
  return out;
}

namespace {

struct EventInfo {
  RobotId receiver = -1;
  RobotId supporter = -1;
  NodeId from = -1;
  NodeId to = -1;
  NodeId support_node = -1;
};

// One contiguous stretch of a robot's itinerary: walk `leg`, then (if
// event >= 0) take part in that event at the leg's endpoint.
struct Slot {
  const std::vector<NodeId>* leg = nullptr;
  int event = -1;
  bool is_receiver = false;
  NodeId cross_to = -1;
};

}  // namespace

CostCalcOutcome cost_calculation(const ProblemInstance& inst,
                                 const IndividualCoordinationSet& ics,
                                 PathCache& cache, Cost prune_bound) {
  const int robots = inst.robot_count();
  if (static_cast<int>(ics.per_robot.size()) != robots) {
    throw ValidationError("cost_calculation: ICS must list every robot");
  }

  CostCalcOutcome outcome;

  // Pass 1: chain the shortest-path legs and add up the plan cost.
  int event_count = 0;
  std::vector<EventInfo> events;
  std::vector<std::vector<Slot>> slots(robots);
  Cost total = 0;
  for (RobotId n = 0; n < robots; ++n) {
    NodeId cur = inst.starts[n];
    int prev_event = -1;
    for (const IcsItem& item : ics.per_robot[n]) {
      if (item.event_id <= prev_event) {
        throw ValidationError("cost_calculation: per-robot event ids must increase");
      }
      prev_event = item.event_id;
      event_count = std::max(event_count, item.event_id + 1);
      if (static_cast<int>(events.size()) < event_count) events.resize(event_count);
      EventInfo& ev = events[item.event_id];

      Slot slot;
      slot.event = item.event_id;
      if (item.kind == IcsItem::Kind::cross_risky_edge) {
        const int edge = inst.graph.edge_index(item.from, item.to);
        if (edge < 0 || !inst.graph.is_risky(edge)) {
          throw ValidationError("cost_calculation: cross item is not a risky edge");
        }
        if (ev.receiver >= 0) {
          throw ValidationError("cost_calculation: event has two receivers");
        }
        ev.receiver = n;
        ev.from = item.from;
        ev.to = item.to;
        const PathResult& leg = cache.path(cur, item.from);
        if (!leg.found) return outcome;  // infeasible: unreachable waypoint
        total += leg.cost + inst.supported_cost(edge);
        slot.leg = &leg.path;
        slot.is_receiver = true;
        slot.cross_to = item.to;
        cur = item.to;
      } else {
        if (item.from < 0 || item.from >= inst.graph.node_count()) {
          throw ValidationError("cost_calculation: hold item names an unknown node");
        }
        if (ev.supporter >= 0) {
          throw ValidationError("cost_calculation: event has two supporters");
        }
        ev.supporter = n;
        ev.support_node = item.from;
        const PathResult& leg = cache.path(cur, item.from);
        if (!leg.found) return outcome;
        total += leg.cost;
        slot.leg = &leg.path;
        cur = item.from;
      }
      slots[n].push_back(slot);
      if (total >= prune_bound) {
        outcome.aborted = true;
        return outcome;
      }
    }
    const PathResult& tail = cache.path(cur, inst.goals[n]);
    if (!tail.found) return outcome;
    total += tail.cost;
    Slot final_slot;
    final_slot.leg = &tail.path;
    slots[n].push_back(final_slot);
    if (total >= prune_bound) {
      outcome.aborted = true;
      return outcome;
    }
  }
  for (int e = 0; e < event_count; ++e) {
    if (events[e].receiver < 0 || events[e].supporter < 0 ||
        events[e].receiver == events[e].supporter) {
      throw ValidationError("cost_calculation: event " + std::to_string(e) +
                            " lacks a distinct receiver/supporter pair");
    }
  }

  // Pass 2: pin event times. A robot is released at t+1 after taking part in
  // an event at time t; events keep their given order, with only the minimal
  // waits inserted.
  std::vector<size_t> slot_ptr(robots, 0);
  std::vector<int> release(robots, 0);
  std::vector<std::vector<int>> starts_of(robots);
  for (RobotId n = 0; n < robots; ++n) starts_of[n].resize(slots[n].size(), 0);

  std::vector<int> event_time(event_count, 0);
  int prev_time = 0;
  for (int e = 0; e < event_count; ++e) {
    const EventInfo& ev = events[e];
    for (RobotId who : {ev.receiver, ev.supporter}) {
      const Slot& s = slots[who][slot_ptr[who]];
      if (s.event != e) {
        throw ValidationError("cost_calculation: itinerary order breaks event order");
      }
      starts_of[who][slot_ptr[who]] = release[who];
    }
    const Slot& rs = slots[ev.receiver][slot_ptr[ev.receiver]];
    const Slot& ss = slots[ev.supporter][slot_ptr[ev.supporter]];
    const int arrive_r = release[ev.receiver] + static_cast<int>(rs.leg->size()) - 1;
    const int arrive_s = release[ev.supporter] + static_cast<int>(ss.leg->size()) - 1;
    const int t = std::max({arrive_r, arrive_s, prev_time});
    event_time[e] = t;
    prev_time = t;
    release[ev.receiver] = t + 1;
    release[ev.supporter] = t + 1;
    ++slot_ptr[ev.receiver];
    ++slot_ptr[ev.supporter];
  }
  int horizon = 0;
  for (RobotId n = 0; n < robots; ++n) {
    starts_of[n].back() = release[n];
    horizon = std::max(horizon, release[n] +
                                    static_cast<int>(slots[n].back().leg->size()) - 1);
  }

  // Pass 3: materialize rows, per-step costs, and events.
  Solution sol;
  sol.paths.assign(robots, {});
  sol.per_robot_cost.assign(robots, 0);
  for (RobotId n = 0; n < robots; ++n) {
    auto& row = sol.paths[n];
    row.assign(horizon + 1, inst.starts[n]);
    for (size_t k = 0; k < slots[n].size(); ++k) {
      const Slot& s = slots[n][k];
      const auto& leg = *s.leg;
      const int t = starts_of[n][k];
      for (size_t step = 1; step < leg.size(); ++step) {
        row[t + static_cast<int>(step)] = leg[step];
        sol.per_robot_cost[n] +=
            inst.graph.base_cost(inst.graph.edge_index(leg[step - 1], leg[step]));
      }
      const int arrived = t + static_cast<int>(leg.size()) - 1;
      if (s.event >= 0) {
        const int et = event_time[s.event];
        // wait at the anchor, then act during step `et`
        for (int u = arrived + 1; u <= et; ++u) row[u] = leg.back();
        if (s.is_receiver) {
          row[et + 1] = s.cross_to;
          const int edge = inst.graph.edge_index(leg.back(), s.cross_to);
          sol.per_robot_cost[n] += inst.supported_cost(edge);
        } else {
          row[et + 1] = leg.back();
        }
      } else {
        // final leg: stay at the goal for the rest of the horizon
        for (int u = arrived + 1; u <= horizon; ++u) row[u] = leg.back();
      }
    }
  }
  for (int e = 0; e < event_count; ++e) {
    const EventInfo& ev = events[e];
    sol.events.push_back({event_time[e], ev.receiver, ev.supporter, ev.from, ev.to,
                          ev.support_node});
  }
  std::stable_sort(sol.events.begin(), sol.events.end(),
                   [](const SolutionEvent& a, const SolutionEvent& b) {
                     return a.step < b.step;
                   });
  for (Cost c : sol.per_robot_cost) sol.total_cost += c;
  assert(sol.total_cost == total);

  outcome.feasible = true;
  outcome.solution = std::move(sol);
  outcome.cost = total;
  return outcome;
}

CostCalcOutcome cost_calculation(const ProblemInstance& inst,
                                 const IndividualCoordinationSet& ics) {
  PathCache cache(inst, CostView::pessimistic);
  return cost_calculation(inst, ics, cache);
}

namespace {

// d in [0, N*(N-1)) -> ordered (receiver, supporter), receiver-major.
std::pair<RobotId, RobotId> ordered_pair(int d, int robots) {
  const int receiver = d / (robots - 1);
  int rest = d % (robots - 1);
  const int supporter = rest < receiver ? rest : rest + 1;
  return {receiver, supporter};
}

// Cost-only replay of the leg chaining: distance lookups, no path extraction,
// no assembly. Search-generated ICS items are structurally valid, so the
// checks of the full calculation are skipped here; winners are re-run through
// cost_calculation, which re-validates and must agree.
Cost chained_cost(const ProblemInstance& inst, const IndividualCoordinationSet& ics,
                  PathCache& cache, Cost prune_bound) {
  Cost total = 0;
  for (RobotId n = 0; n < inst.robot_count(); ++n) {
    NodeId cur = inst.starts[n];
    for (const IcsItem& item : ics.per_robot[n]) {
      if (item.kind == IcsItem::Kind::cross_risky_edge) {
        total += cache.distance(cur, item.from) +
                 inst.supported_cost(inst.graph.edge_index(item.from, item.to));
        cur = item.to;
      } else {
        total += cache.distance(cur, item.from);
        cur = item.from;
      }
      if (total >= prune_bound) return kInfiniteCost;
    }
    total += cache.distance(cur, inst.goals[n]);
    if (total >= prune_bound) return kInfiniteCost;
  }
  return total;
}

}  // namespace

CesResult solve_ces(const ProblemInstance& inst, int max_uses_per_pair,
                    const SolveLimits& limits) {
  require_valid(inst);
  if (max_uses_per_pair < 1) {
    throw ValidationError("solve_ces: max_uses_per_pair must be >= 1");
  }
  const int robots = inst.robot_count();

  CesResult result;
  result.solution = naive_solve(inst);
  result.cost = result.solution.total_cost;

  // Optimistic bound: if assuming ever-present support cannot beat the naive
  // cost, no coordination schedule can either.
  Cost optimistic_total = 0;
  for (RobotId n = 0; n < robots; ++n) {
    optimistic_total +=
        shortest_path(inst, inst.starts[n], inst.goals[n], CostView::optimistic).cost;
  }
  if (result.cost <= optimistic_total) return result;
  if (robots < 2) return result;

  const std::vector<SupportPair> coordination_set = build_coordination_set(inst);
  if (coordination_set.empty()) return result;
  const int pair_count = static_cast<int>(coordination_set.size());
  const int pair_choices = robots * (robots - 1);

  PathCache cache(inst, CostView::pessimistic);
  EnumerationCounters& counters = result.counters;

  // Multiset subsets as per-pair use counts (0..max_uses each).
  std::vector<int> uses(pair_count, 0);
  IndividualCoordinationSet ics;
  while (true) {
    ++counters.subsets_visited;
    std::vector<int> selected;
    for (int p = 0; p < pair_count; ++p) {
      for (int u = 0; u < uses[p]; ++u) selected.push_back(p);
    }
    if (!selected.empty()) {
      const int k = static_cast<int>(selected.size());
      std::vector<int> perm = selected;  // sorted: valid next_permutation start
      do {
        ++counters.permutations_visited;
        for (std::uint32_t dir_bits = 0; dir_bits < (1u << k); ++dir_bits) {
          // odometer over ordered robot pairs, one digit per event
          std::vector<int> assign(k, 0);
          while (true) {
            ++counters.assignments_visited;
            if (ics.per_robot.size() != static_cast<size_t>(robots)) {
              ics.per_robot.resize(robots);
            }
            for (auto& items : ics.per_robot) items.clear();
            for (int e = 0; e < k; ++e) {
              const SupportPair& sp = coordination_set[perm[e]];
              const bool reversed = (dir_bits >> e) & 1u;
              const NodeId from = reversed ? sp.edge_v : sp.edge_u;
              const NodeId to = reversed ? sp.edge_u : sp.edge_v;
              const auto [receiver, supporter] = ordered_pair(assign[e], robots);
              ics.per_robot[receiver].push_back(
                  {IcsItem::Kind::cross_risky_edge, e, from, to});
              ics.per_robot[supporter].push_back(
                  {IcsItem::Kind::hold_support_node, e, sp.support_node, -1});
            }
            ++counters.cost_calculations;
            if (limits.max_cost_calculations != 0 &&
                counters.cost_calculations > limits.max_cost_calculations) {
              throw ResourceLimitError("ces exceeded " +
                                       std::to_string(limits.max_cost_calculations) +
                                       " cost calculations");
            }
            if (counters.cost_calculations % 512 == 0) limits.enforce_deadline();

            const Cost quick = chained_cost(inst, ics, cache, result.cost);
            if (quick < result.cost) {
              CostCalcOutcome outcome = cost_calculation(inst, ics, cache, result.cost);
              if (outcome.feasible && !outcome.aborted && outcome.cost < result.cost) {
                result.cost = outcome.cost;
                result.solution = std::move(outcome.solution);
              }
            }

            int digit = 0;
            for (; digit < k; ++digit) {
              if (++assign[digit] < pair_choices) break;
              assign[digit] = 0;
            }
            if (digit == k) break;
          }
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }

    int p = 0;
    for (; p < pair_count; ++p) {
      if (++uses[p] <= max_uses_per_pair) break;
      uses[p] = 0;
    }
    if (p == pair_count) break;
  }
  return result;
}

}  // namespace tcgre
