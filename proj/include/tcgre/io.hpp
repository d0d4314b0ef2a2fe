#pragma once

#include <string>

#include "tcgre/instance.hpp"
#include "tcgre/solution.hpp"

namespace tcgre {

// Instance text format: JSON object with keys
//   nodes: int, edges: [[u, v, cost], ...],
//   risky: [[u, v, reduced_cost, [support...]], ...],
//   supporter_cost: number, starts: [int...], goals: [int...],
//   horizon: int (optional).
// Unknown keys are parse errors; invariant breaks surface as ValidationError.
ProblemInstance read_instance(const std::string& text);
std::string write_instance(const ProblemInstance& inst);

// Solution text format: JSON object with keys paths, events, per_robot_cost,
// total_cost. Events carry step/receiver/supporter/edge/support_node.
Solution read_solution(const std::string& text);
std::string write_solution(const Solution& sol);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

ProblemInstance load_instance(const std::string& path);
void save_instance(const std::string& path, const ProblemInstance& inst);
Solution load_solution(const std::string& path);
void save_solution(const std::string& path, const Solution& sol);

}  // namespace tcgre
