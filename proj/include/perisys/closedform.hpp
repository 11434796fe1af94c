#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "perisys/model.hpp"
#include "perisys/rational.hpp"
#include "perisys/simulator.hpp"

namespace perisys {

/// Drift of the log-solution induced by c = a/b.
struct DriftReport {
  ExactRational c{1};
  /// ln|c| / (2p), natural-log units per index.
  double drift_per_step = 0.0;
  /// m = lcm(p, 2q).
  std::int64_t steps_per_block = 1;
  /// c^(q/g), present only when p/g is odd.
  std::optional<ExactRational> block_ratio;
};

DriftReport drift(const SystemSpec& spec);

/// c^(q/g) with g = gcd(p, q); throws NotOddQuotient when p/g is even.
ExactRational block_ratio(const SystemSpec& spec);

/// x_{n+m} / x_n == c^(q/g) for 1 <= n <= N - m, m = lcm(p, 2q).
/// Throws NotOddQuotient (p/g even), WrongBackend, TooFewPoints (N < m + 1).
bool block_ratio_check(const Trajectory& traj);

/// x_{n+2m} x_n == x_{n+m}^2 for 1 <= n <= N - 2m, m = lcm(p, 2q).
/// Throws WrongRegime when |a| != |b|, WrongBackend, TooFewPoints (N < 2m + 1).
bool second_difference_check(const Trajectory& traj);

/// Least-squares slope of ln|x_{mk+t}| against k over the whole subsequence.
/// Throws TooFewPoints with fewer than 3 points.
double growth_slope(const Trajectory& traj, std::int64_t m, std::int64_t t);

enum class Monotonicity { increasing, decreasing, constant, non_monotone };

std::string to_string(Monotonicity m);

/// Strict monotonicity of |x_{mk+t}| restricted to indices >= `start`,
/// compared exactly. Throws TooFewPoints with fewer than 3 such points.
Monotonicity monotone_check(const Trajectory& traj, std::int64_t m, std::int64_t t, std::int64_t start = 1);

nlohmann::json drift_to_json(const DriftReport& report);

}  // namespace perisys
