#include <doctest.h>

#include "fixtures.hpp"
#include "tcgre/io.hpp"
#include "tcgre/jsg_solver.hpp"
#include "tcgre/oracle.hpp"
#include "tcgre/solution.hpp"

using namespace tcgre;
using testing::make_t1;
using testing::make_tiny;

namespace {

bool has_rule(const std::vector<Violation>& vs, const std::string& rule) {
  for (const Violation& v : vs) {
    if (v.rule == rule) return true;
  }
  return false;
}

}  // namespace

TEST_SUITE("core_model") {

TEST_CASE("T1 fixture is valid") {
  CHECK(validate_instance(make_t1()).empty());
}

TEST_CASE("emptied support set is reported") {
  ProblemInstance inst = make_t1();
  auto risky = inst.graph.risky_specs();
  risky[0].info.support_nodes.clear();
  inst.graph = Graph(inst.graph.node_count(), inst.graph.edges(), std::move(risky));
  const auto violations = validate_instance(inst);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].rule == "risky_support_nonempty");
}

TEST_CASE("reduced cost above base cost is reported") {
  ProblemInstance inst = make_t1();
  auto risky = inst.graph.risky_specs();
  risky[0].info.reduced_cost = cost_from_units(11);
  inst.graph = Graph(inst.graph.node_count(), inst.graph.edges(), std::move(risky));
  const auto violations = validate_instance(inst);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].rule == "reduced_cost_le_base");
}

TEST_CASE("assorted structural violations") {
  ProblemInstance inst = make_t1();
  SUBCASE("goal out of range") {
    inst.goals[0] = 9;
    CHECK(has_rule(validate_instance(inst), "goal_node_range"));
  }
  SUBCASE("risky entry without matching edge") {
    auto risky = inst.graph.risky_specs();
    risky.push_back({0, 2, {cost_from_units(1), {3}}});
    inst.graph = Graph(4, inst.graph.edges(), std::move(risky));
    CHECK(has_rule(validate_instance(inst), "risky_is_edge"));
  }
  SUBCASE("disconnected graph") {
    auto edges = inst.graph.edges();
    edges.erase(edges.begin() + 2);  // drop (0,3)
    auto risky = inst.graph.risky_specs();
    inst.graph = Graph(4, std::move(edges), std::move(risky));
    CHECK(has_rule(validate_instance(inst), "graph_connected"));
  }
  SUBCASE("self loop") {
    auto edges = inst.graph.edges();
    edges.push_back({2, 2, cost_from_units(1)});
    inst.graph = Graph(4, std::move(edges), inst.graph.risky_specs());
    CHECK(has_rule(validate_instance(inst), "edge_no_self_loop"));
  }
}

TEST_CASE("transition_cost on T1 steps") {
  const ProblemInstance inst = make_t1();
  JointTransition tr;

  SUBCASE("supported crossing pays the effective supported cost") {
    tr.from.locations = {1, 3};
    tr.to.locations = {2, 3};
    tr.coordination = {{0, 1, 1, 2}};
    CHECK(transition_cost(inst, tr) == cost_from_units(2));
  }
  SUBCASE("unsupported risky crossing pays the base cost") {
    tr.from.locations = {1, 0};
    tr.to.locations = {2, 0};
    CHECK(transition_cost(inst, tr) == cost_from_units(10));
  }
  SUBCASE("plain edge pays its base cost") {
    tr.from.locations = {0, 3};
    tr.to.locations = {1, 3};
    CHECK(transition_cost(inst, tr) == cost_from_units(1));
  }
  SUBCASE("invalid: supporter off the support set") {
    tr.from.locations = {1, 0};
    tr.to.locations = {2, 0};
    tr.coordination = {{0, 1, 1, 2}};
    CHECK_THROWS_AS(transition_cost(inst, tr), ValidationError);
  }
  SUBCASE("invalid: all robots stay while off-goal") {
    tr.from.locations = {0, 3};
    tr.to.locations = {0, 3};
    CHECK_THROWS_AS(transition_cost(inst, tr), ValidationError);
  }
  SUBCASE("all-stay at the joint goal is the exempt terminal configuration") {
    tr.from.locations = {2, 3};
    tr.to.locations = {2, 3};
    CHECK(transition_cost(inst, tr) == 0);
  }
  SUBCASE("invalid: self support") {
    tr.from.locations = {1, 3};
    tr.to.locations = {2, 3};
    tr.coordination = {{0, 0, 1, 2}};
    CHECK_THROWS_AS(transition_cost(inst, tr), ValidationError);
  }
}

TEST_CASE("validate_solution accepts the optimal T1 plan and reports 3") {
  const ProblemInstance inst = make_t1();
  Solution sol;
  sol.paths = {{0, 1, 2}, {3, 3, 3}};
  sol.events = {{1, 0, 1, 1, 2, 3}};
  sol.per_robot_cost = {cost_from_units(3), 0};
  sol.total_cost = cost_from_units(3);
  const SolutionCheck check = validate_solution(inst, sol);
  CHECK(check.ok());
  CHECK(check.recomputed_total == cost_from_units(3));
}

TEST_CASE("validate_solution rejects an all-stay step before completion") {
  const ProblemInstance inst = make_t1();
  Solution sol;
  sol.paths = {{0, 0, 1, 2}, {3, 3, 3, 3}};
  sol.events = {{2, 0, 1, 1, 2, 3}};
  sol.per_robot_cost = {cost_from_units(3), 0};
  sol.total_cost = cost_from_units(3);
  const SolutionCheck check = validate_solution(inst, sol);
  REQUIRE_FALSE(check.ok());
  CHECK(check.violations[0].rule == "no_all_stay");
}

TEST_CASE("validate_solution flags an understated total") {
  const ProblemInstance inst = make_t1();
  Solution sol;
  sol.paths = {{0, 1, 2}, {3, 3, 3}};
  sol.events = {{1, 0, 1, 1, 2, 3}};
  sol.per_robot_cost = {cost_from_units(2), 0};
  sol.total_cost = cost_from_units(2);
  const SolutionCheck check = validate_solution(inst, sol);
  REQUIRE_FALSE(check.ok());
  CHECK(has_rule(check.violations, "cost_mismatch"));
}

TEST_CASE("instance file round trip") {
  const ProblemInstance inst = make_t1();
  const std::string text = write_instance(inst);
  const ProblemInstance back = read_instance(text);
  CHECK(back == inst);
  CHECK(write_instance(back) == text);
}

TEST_CASE("unknown field is a parse error naming the field") {
  const std::string text = R"({"nodes": 2, "edges": [[0,1,1]], "risky": [],
      "supporter_cost": 1, "starts": [0], "goals": [1], "bogus": 3})";
  CHECK_THROWS_WITH_AS(read_instance(text),
                       doctest::Contains("unknown field \"bogus\""), ParseError);
}

TEST_CASE("goal id out of range fails on read as a validation error") {
  const std::string text = R"({"nodes": 2, "edges": [[0,1,1]], "risky": [],
      "supporter_cost": 1, "starts": [0], "goals": [7]})";
  CHECK_THROWS_AS(read_instance(text), ValidationError);
}

TEST_CASE("solution file round trip") {
  Solution sol;
  sol.paths = {{0, 1, 2}, {3, 3, 3}};
  sol.events = {{1, 0, 1, 1, 2, 3}};
  sol.per_robot_cost = {cost_from_units(3), 0};
  sol.total_cost = cost_from_units(3);
  const Solution back = read_solution(write_solution(sol));
  CHECK(back == sol);
}

TEST_CASE("fractional costs survive the text format") {
  ProblemInstance inst = make_t1();
  auto edges = inst.graph.edges();
  edges[0].base_cost = cost_from_double(2.5);
  inst.graph = Graph(4, std::move(edges), inst.graph.risky_specs());
  const ProblemInstance back = read_instance(write_instance(inst));
  CHECK(back == inst);
}

TEST_CASE("property: reassignment neutrality on random transitions") {
  // Receiver-side accounting must total the same as the original split where
  // the receiver pays the reduced cost and the supporter pays the coordination
  // fee.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const ProblemInstance inst = make_tiny(seed, 2 + static_cast<int>(seed % 2));
    std::mt19937_64 rng(seed);
    JointState from;
    for (RobotId n = 0; n < inst.robot_count(); ++n) {
      from.locations.push_back(
          static_cast<NodeId>(rng_below(rng, inst.graph.node_count())));
    }
    for (const JointTransition& tr : expand(inst, from)) {
      Cost eq1 = 0;
      std::vector<char> role(inst.robot_count(), 0);
      for (const CoordinationTriple& c : tr.coordination) {
        role[c.receiver] = 1;
        role[c.supporter] = 2;
      }
      for (RobotId n = 0; n < inst.robot_count(); ++n) {
        if (role[n] == 2) {
          eq1 += inst.supporter_cost;
        } else if (tr.from.locations[n] != tr.to.locations[n]) {
          const int e = inst.graph.edge_index(tr.from.locations[n], tr.to.locations[n]);
          eq1 += role[n] == 1 ? inst.graph.risky(e)->reduced_cost : inst.graph.base_cost(e);
        }
      }
      CHECK(eq1 == transition_cost(inst, tr));
    }
  }
}

TEST_CASE("property: transition cost is zero iff everyone stays or supports") {
  const ProblemInstance inst = make_t1();
  JointTransition tr;
  tr.from.locations = {2, 3};
  tr.to.locations = {2, 3};
  CHECK(transition_cost(inst, tr) == 0);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ProblemInstance tiny = make_tiny(seed);
    JointState from;
    from.locations = tiny.starts;
    for (const JointTransition& t : expand(tiny, from)) {
      bool any_mover = false;
      for (RobotId n = 0; n < tiny.robot_count(); ++n) {
        if (t.from.locations[n] != t.to.locations[n]) any_mover = true;
      }
      CHECK(t.cost >= 0);
      if (any_mover) CHECK(t.cost > 0);  // tiny instances have positive costs
    }
  }
}

TEST_CASE("property: raising an unsupported edge cost never lowers a step cost") {
  const ProblemInstance inst = make_t1();
  JointTransition tr;
  tr.from.locations = {1, 0};
  tr.to.locations = {2, 0};
  const Cost before = transition_cost(inst, tr);

  ProblemInstance bumped = inst;
  auto edges = bumped.graph.edges();
  for (auto& e : edges) {
    if ((e.u == 1 && e.v == 2) || (e.u == 2 && e.v == 1)) {
      e.base_cost += cost_from_units(5);
    }
  }
  bumped.graph = Graph(4, std::move(edges), bumped.graph.risky_specs());
  CHECK(transition_cost(bumped, tr) >= before);
}

}  // TEST_SUITE
