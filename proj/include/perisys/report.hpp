#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "perisys/closedform.hpp"
#include "perisys/cycle.hpp"
#include "perisys/model.hpp"
#include "perisys/simulator.hpp"
#include "perisys/spectral.hpp"

namespace perisys {

/// How a detector outcome relates to the symbolic prediction. Degenerate means
/// special initial data produced a cycle inside a generically unbounded regime.
enum class Consistency { consistent, consistent_degenerate, inconsistent };

std::string to_string(Consistency c);

/// Periodic regimes expect a cycle whose period divides lcm(p, 2q) when the
/// block ratio c^(q/g) is 1, divides 2 lcm(p, 2q) when it is -1, and no cycle
/// at all otherwise (drift). Unbounded regimes expect no cycle.
Consistency assess_agreement(const Classification& classification, const SystemSpec& spec, const CycleResult& cycle);

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SlopeEntry {
  std::int64_t m = 1;
  std::int64_t t = 0;
  double slope = 0.0;
};

struct RunReport {
  SystemSpec spec;
  std::int64_t n_max = 0;
  std::int64_t horizon = 0;
  Classification classification;
  CycleResult cycle;
  std::vector<CheckOutcome> checks;
  std::vector<std::string> skipped;
  std::optional<DriftReport> drift;
  std::vector<SlopeEntry> slopes;

  bool all_passed() const;
  std::vector<std::string> failing() const;
  nlohmann::json to_json() const;
};

/// Runs every applicable check on `traj` and a cycle search on its spec out
/// to `horizon`.
RunReport verify_trajectory(const Trajectory& traj, std::int64_t horizon, std::size_t max_bits = kDefaultMaxBits);

RunReport run_verify(const SystemSpec& spec, std::int64_t n_max, std::int64_t horizon,
                     std::size_t max_bits = kDefaultMaxBits);

struct SweepConfig {
  std::int64_t p_min = 1;
  std::int64_t p_max = 12;
  std::int64_t q_max = 12;
  int trials = 3;
  /// Per-row default_horizon(p, q) when unset.
  std::optional<std::int64_t> horizon;
  std::uint64_t seed = 1;
  std::size_t max_bits = kDefaultMaxBits;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct SweepRow {
  std::int64_t p = 1;
  std::int64_t q = 1;
  std::int64_t horizon = 0;
  Classification classification;
  std::vector<CycleResult> trials;
  Consistency status = Consistency::consistent;
};

/// Rows for p_min <= p <= p_max, p < q <= q_max, ordered by (p, q). Trials use
/// a = b = 1 and random positive initial data; each row draws from its own
/// generator seeded with (seed, p, q), so results do not depend on threading.
std::vector<SweepRow> run_sweep(const SweepConfig& config);

nlohmann::json sweep_to_json(const SweepConfig& config, const std::vector<SweepRow>& rows);

}  // namespace perisys
