#include "perisys/closedform.hpp"

#include <cmath>
#include <numeric>

#include "perisys/errors.hpp"

namespace perisys {

namespace {

std::int64_t block_length(const SystemSpec& spec) { return std::lcm(spec.p, 2 * spec.q); }

bool odd_quotient(const SystemSpec& spec) { return (spec.p / std::gcd(spec.p, spec.q)) % 2 != 0; }

void require_exact(const Trajectory& traj, const char* what) {
  if (traj.backend() != Backend::exact) throw WrongBackend(std::string(what) + " needs the exact backend");
}

}  // namespace

DriftReport drift(const SystemSpec& spec) {
  DriftReport report;
  report.c = spec.c();
  report.drift_per_step = to_signed_log(report.c).logmag / static_cast<double>(2 * spec.p);
  report.steps_per_block = block_length(spec);
  if (odd_quotient(spec)) report.block_ratio = block_ratio(spec);
  return report;
}

ExactRational block_ratio(const SystemSpec& spec) {
  if (!odd_quotient(spec)) throw NotOddQuotient("p/gcd(p, q) is even; no exact block ratio");
  return spec.c().pow(spec.q / std::gcd(spec.p, spec.q));
}

bool block_ratio_check(const Trajectory& traj) {
  require_exact(traj, "block_ratio_check");
  const ExactRational ratio = block_ratio(traj.spec());
  const std::int64_t m = block_length(traj.spec());
  if (traj.last_index() < m + 1) throw TooFewPoints("block_ratio_check needs N >= lcm(p, 2q) + 1");
  for (std::int64_t n = 1; n + m <= traj.last_index(); ++n) {
    if (traj.x(n + m) != ratio * traj.x(n)) return false;
  }
  return true;
}

bool second_difference_check(const Trajectory& traj) {
  require_exact(traj, "second_difference_check");
  const SystemSpec& spec = traj.spec();
  if (spec.a.abs() != spec.b.abs()) throw WrongRegime("second_difference_check needs |a| = |b|");
  const std::int64_t m = block_length(spec);
  if (traj.last_index() < 2 * m + 1) throw TooFewPoints("second_difference_check needs N >= 2 lcm(p, 2q) + 1");
  for (std::int64_t n = 1; n + 2 * m <= traj.last_index(); ++n) {
    const ExactRational& mid = traj.x(n + m);
    if (traj.x(n + 2 * m) * traj.x(n) != mid * mid) return false;
  }
  return true;
}

double growth_slope(const Trajectory& traj, std::int64_t m, std::int64_t t) {
  const auto logs = log_subsequence(traj, m, t, Which::x);
  if (logs.size() < 3) throw TooFewPoints("growth_slope needs at least 3 subsequence points");
  // Centering on the first value keeps an exactly constant sequence at slope 0.
  const double k_mean = static_cast<double>(logs.size() - 1) / 2.0;
  const double base = logs.front().logmag;
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < logs.size(); ++k) {
    const double dk = static_cast<double>(k) - k_mean;
    num += dk * (logs[k].logmag - base);
    den += dk * dk;
  }
  return num / den;
}

Monotonicity monotone_check(const Trajectory& traj, std::int64_t m, std::int64_t t, std::int64_t start) {
  require_exact(traj, "monotone_check");
  std::vector<ExactRational> magnitudes;
  for (const auto& v : subsequence(traj, m, t, Which::x)) magnitudes.push_back(v.abs());
  // Drop the points before `start`.
  std::int64_t first_k = start <= t ? 0 : (start - t + m - 1) / m;
  if (first_k > static_cast<std::int64_t>(magnitudes.size())) first_k = static_cast<std::int64_t>(magnitudes.size());
  magnitudes.erase(magnitudes.begin(), magnitudes.begin() + first_k);
  if (magnitudes.size() < 3) throw TooFewPoints("monotone_check needs at least 3 subsequence points");

  bool up = true;
  bool down = true;
  bool flat = true;
  for (std::size_t k = 1; k < magnitudes.size(); ++k) {
    const auto order = magnitudes[k] <=> magnitudes[k - 1];
    up = up && order > 0;
    down = down && order < 0;
    flat = flat && order == 0;
  }
  if (flat) return Monotonicity::constant;
  if (up) return Monotonicity::increasing;
  if (down) return Monotonicity::decreasing;
  return Monotonicity::non_monotone;
}

std::string to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::increasing:
      return "Increasing";
    case Monotonicity::decreasing:
      return "Decreasing";
    case Monotonicity::constant:
      return "Constant";
    case Monotonicity::non_monotone:
      return "NonMonotone";
  }
  return "unknown";
}

nlohmann::json drift_to_json(const DriftReport& report) {
  nlohmann::json out{{"c", report.c.str()},
                     {"drift_per_step", report.drift_per_step},
                     {"steps_per_block", report.steps_per_block}};
  if (report.block_ratio) out["block_ratio"] = report.block_ratio->str();
  return out;
}

}  // namespace perisys
