#pragma once

#include <cstdint>
#include <variant>

#include <json.hpp>

#include "perisys/model.hpp"
#include "perisys/simulator.hpp"

namespace perisys {

/// The state window ending at index `preperiod` (the last max(p, q) pairs)
/// is the first one to recur, `period` steps later. Every pair with index
/// >= first_periodic_index() repeats with that period, and no earlier pair
/// does. Preperiod 0 means the initial window itself recurs.
struct Periodic {
  std::int64_t preperiod = 0;
  std::int64_t period = 1;
  std::int64_t history = 1;

  std::int64_t first_periodic_index() const { return preperiod == 0 ? 1 - history : preperiod - history + 1; }
  friend bool operator==(const Periodic&, const Periodic&) = default;
};

struct NoCycleWithinHorizon {
  std::int64_t horizon = 0;
  friend bool operator==(const NoCycleWithinHorizon&, const NoCycleWithinHorizon&) = default;
};

using CycleResult = std::variant<Periodic, NoCycleWithinHorizon>;

/// 4 lcm(p, 2q) + 4 max(p, q).
std::int64_t default_horizon(std::int64_t p, std::int64_t q);

/// Simulates (exact backend) until a state window recurs or the window
/// ending at `horizon` has been examined. Propagates BitLengthExceeded.
CycleResult detect_cycle(const SystemSpec& spec, std::int64_t horizon, std::size_t max_bits = kDefaultMaxBits);

/// Same search over an existing exact trajectory, horizon = its last index.
CycleResult detect_cycle(const Trajectory& traj);

/// Cycle of the joint sign pattern (sign x_n, sign y_n); values are ignored.
/// Works on either backend.
CycleResult detect_sign_cycle(const Trajectory& traj);

/// Pairs at n and n + period agree for from <= n <= to (exact backend).
bool pairs_repeat(const Trajectory& traj, std::int64_t period, std::int64_t from, std::int64_t to);

nlohmann::json cycle_to_json(const CycleResult& result);

}  // namespace perisys
