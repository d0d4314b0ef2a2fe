#pragma once

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace tcgre {

using NodeId = std::int32_t;
using RobotId = std::int32_t;

// Costs are fixed-point integers: one cost unit == kCostScale ticks.
// Additions and comparisons are exact; doubles exist only at I/O boundaries,
// where anything within half a tick (0.5e-9) of a representable value maps to
// that value.
using Cost = std::int64_t;
inline constexpr Cost kCostScale = 1'000'000'000;
inline constexpr Cost kInfiniteCost = std::numeric_limits<Cost>::max() / 4;

Cost cost_from_double(double value);
double cost_to_double(Cost ticks);
Cost cost_from_units(std::int64_t units);

// Exact decimal rendering, shortest form ("2", "2.5", "0.000000001").
std::string cost_to_string(Cost ticks);

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (bad JSON, unknown field, wrong shape).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally parseable input that breaks a model invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A solver hit a configured cap (states, expansions, cost calculations).
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// A solver ran past its wall-clock deadline.
class DeadlineExceeded : public Error {
 public:
  using Error::Error;
};

// Caps shared by all solvers. Zero-valued caps are treated as "unlimited".
struct SolveLimits {
  std::uint64_t max_expanded = 10'000'000;
  std::uint64_t max_states = 10'000'000;
  std::uint64_t max_cost_calculations = 1'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  bool past_deadline() const {
    return deadline && std::chrono::steady_clock::now() > *deadline;
  }
  void enforce_deadline() const {
    if (past_deadline()) throw DeadlineExceeded("solver deadline exceeded");
  }
};

}  // namespace tcgre
