#include "tcgre/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tcgre {

namespace {

using json = nlohmann::ordered_json;

Cost cost_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return cost_from_units(j.get<std::int64_t>());
  if (j.is_number_unsigned()) return cost_from_units(static_cast<std::int64_t>(j.get<std::uint64_t>()));
  if (j.is_number_float()) return cost_from_double(j.get<double>());
  throw ParseError(where + ": expected a number");
}

json cost_to_json(Cost c) {
  if (c % kCostScale == 0) return json(c / kCostScale);
  return json(cost_to_double(c));
}

int int_from_json(const json& j, const std::string& where) {
  if (!j.is_number_integer() && !j.is_number_unsigned()) {
    throw ParseError(where + ": expected an integer");
  }
  return j.get<int>();
}

std::vector<NodeId> node_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array");
  std::vector<NodeId> out;
  out.reserve(j.size());
  for (size_t i = 0; i < j.size(); ++i) {
    out.push_back(int_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> known,
                         const std::string& where) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* k : known) {
      if (it.key() == k) {
        ok = true;
        break;
      }
    }
    if (!ok) throw ParseError(where + ": unknown field \"" + it.key() + "\"");
  }
}

const json& require_key(const json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(where + ": missing field \"" + key + "\"");
  return *it;
}

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

ProblemInstance read_instance(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object()) throw ParseError("instance: expected a JSON object");
  reject_unknown_keys(j, {"nodes", "edges", "risky", "supporter_cost", "starts", "goals", "horizon"},
                      "instance");

  ProblemInstance inst;
  const int nodes = int_from_json(require_key(j, "nodes", "instance"), "nodes");

  std::vector<EdgeSpec> edges;
  const json& jedges = require_key(j, "edges", "instance");
  if (!jedges.is_array()) throw ParseError("edges: expected an array");
  for (size_t i = 0; i < jedges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const json& e = jedges[i];
    if (!e.is_array() || e.size() != 3) throw ParseError(where + ": expected [u, v, cost]");
    EdgeSpec spec;
    spec.u = int_from_json(e[0], where + ".u");
    spec.v = int_from_json(e[1], where + ".v");
    spec.base_cost = cost_from_json(e[2], where + ".cost");
    edges.push_back(spec);
  }

  std::vector<RiskySpec> risky;
  const json& jrisky = require_key(j, "risky", "instance");
  if (!jrisky.is_array()) throw ParseError("risky: expected an array");
  for (size_t i = 0; i < jrisky.size(); ++i) {
    const std::string where = "risky[" + std::to_string(i) + "]";
    const json& r = jrisky[i];
    if (!r.is_array() || r.size() != 4) {
      throw ParseError(where + ": expected [u, v, reduced_cost, [supports...]]");
    }
    RiskySpec spec;
    spec.u = int_from_json(r[0], where + ".u");
    spec.v = int_from_json(r[1], where + ".v");
    spec.info.reduced_cost = cost_from_json(r[2], where + ".reduced_cost");
    spec.info.support_nodes = node_list(r[3], where + ".support_nodes");
    risky.push_back(spec);
  }

  inst.graph = Graph(nodes, std::move(edges), std::move(risky));
  inst.supporter_cost = cost_from_json(require_key(j, "supporter_cost", "instance"), "supporter_cost");
  inst.starts = node_list(require_key(j, "starts", "instance"), "starts");
  inst.goals = node_list(require_key(j, "goals", "instance"), "goals");
  if (auto it = j.find("horizon"); it != j.end()) {
    inst.horizon = int_from_json(*it, "horizon");
  }

  require_valid(inst);
  return inst;
}

std::string write_instance(const ProblemInstance& inst) {
  json j;
  j["nodes"] = inst.graph.node_count();

  std::vector<EdgeSpec> edges = inst.graph.edges();
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const EdgeSpec& a, const EdgeSpec& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  json jedges = json::array();
  for (const EdgeSpec& e : edges) jedges.push_back({e.u, e.v, cost_to_json(e.base_cost)});
  j["edges"] = std::move(jedges);

  std::vector<RiskySpec> risky = inst.graph.risky_specs();
  for (auto& r : risky) {
    if (r.u > r.v) std::swap(r.u, r.v);
    std::sort(r.info.support_nodes.begin(), r.info.support_nodes.end());
  }
  std::sort(risky.begin(), risky.end(), [](const RiskySpec& a, const RiskySpec& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  json jrisky = json::array();
  for (const RiskySpec& r : risky) {
    jrisky.push_back({r.u, r.v, cost_to_json(r.info.reduced_cost), r.info.support_nodes});
  }
  j["risky"] = std::move(jrisky);

  j["supporter_cost"] = cost_to_json(inst.supporter_cost);
  j["starts"] = inst.starts;
  j["goals"] = inst.goals;
  if (inst.horizon) j["horizon"] = *inst.horizon;
  return j.dump(2) + "\n";
}

Solution read_solution(const std::string& text) {
  const json j = parse_text(text);
  if (!j.is_object()) throw ParseError("solution: expected a JSON object");
  reject_unknown_keys(j, {"paths", "events", "per_robot_cost", "total_cost"}, "solution");

  Solution sol;
  const json& jpaths = require_key(j, "paths", "solution");
  if (!jpaths.is_array()) throw ParseError("paths: expected an array");
  for (size_t n = 0; n < jpaths.size(); ++n) {
    sol.paths.push_back(node_list(jpaths[n], "paths[" + std::to_string(n) + "]"));
  }

  const json& jevents = require_key(j, "events", "solution");
  if (!jevents.is_array()) throw ParseError("events: expected an array");
  for (size_t i = 0; i < jevents.size(); ++i) {
    const std::string where = "events[" + std::to_string(i) + "]";
    const json& e = jevents[i];
    if (!e.is_object()) throw ParseError(where + ": expected an object");
    reject_unknown_keys(e, {"step", "receiver", "supporter", "edge", "support_node"}, where);
    SolutionEvent ev;
    ev.step = int_from_json(require_key(e, "step", where), where + ".step");
    ev.receiver = int_from_json(require_key(e, "receiver", where), where + ".receiver");
    ev.supporter = int_from_json(require_key(e, "supporter", where), where + ".supporter");
    const json& je = require_key(e, "edge", where);
    if (!je.is_array() || je.size() != 2) throw ParseError(where + ".edge: expected [u, v]");
    ev.edge_u = int_from_json(je[0], where + ".edge.u");
    ev.edge_v = int_from_json(je[1], where + ".edge.v");
    ev.support_node =
        int_from_json(require_key(e, "support_node", where), where + ".support_node");
    sol.events.push_back(ev);
  }

  const json& jcosts = require_key(j, "per_robot_cost", "solution");
  if (!jcosts.is_array()) throw ParseError("per_robot_cost: expected an array");
  for (size_t n = 0; n < jcosts.size(); ++n) {
    sol.per_robot_cost.push_back(
        cost_from_json(jcosts[n], "per_robot_cost[" + std::to_string(n) + "]"));
  }
  sol.total_cost = cost_from_json(require_key(j, "total_cost", "solution"), "total_cost");
  return sol;
}

std::string write_solution(const Solution& sol) {
  json j;
  j["paths"] = sol.paths;
  json jevents = json::array();
  for (const SolutionEvent& ev : sol.events) {
    json e;
    e["step"] = ev.step;
    e["receiver"] = ev.receiver;
    e["supporter"] = ev.supporter;
    e["edge"] = {ev.edge_u, ev.edge_v};
    e["support_node"] = ev.support_node;
    jevents.push_back(std::move(e));
  }
  j["events"] = std::move(jevents);
  json jcosts = json::array();
  for (Cost c : sol.per_robot_cost) jcosts.push_back(cost_to_json(c));
  j["per_robot_cost"] = std::move(jcosts);
  j["total_cost"] = cost_to_json(sol.total_cost);
  return j.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file for reading: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open file for writing: " + path);
  out << content;
  if (!out) throw Error("write failed: " + path);
}

ProblemInstance load_instance(const std::string& path) {
  return read_instance(read_text_file(path));
}

void save_instance(const std::string& path, const ProblemInstance& inst) {
  write_text_file(path, write_instance(inst));
}

Solution load_solution(const std::string& path) {
  return read_solution(read_text_file(path));
}

void save_solution(const std::string& path, const Solution& sol) {
  write_text_file(path, write_solution(sol));
}

}  // namespace tcgre
