#include "perisys/report.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "perisys/errors.hpp"

namespace perisys {

std::string to_string(Consistency c) {
  switch (c) {
    case Consistency::consistent:
      return "CONSISTENT";
    case Consistency::consistent_degenerate:
      return "CONSISTENT-DEGENERATE";
    case Consistency::inconsistent:
      return "INCONSISTENT";
  }
  return "unknown";
}

Consistency assess_agreement(const Classification& classification, const SystemSpec& spec, const CycleResult& cycle) {
  const auto* periodic = std::get_if<Periodic>(&cycle);
  if (!classification.periodic()) {
    return periodic ? Consistency::consistent_degenerate : Consistency::consistent;
  }
  const ExactRational ratio = block_ratio(spec);
  std::int64_t bound = 0;
  if (ratio == ExactRational(1)) {
    bound = classification.block_modulus;
  } else if (ratio == ExactRational(-1)) {
    bound = 2 * classification.block_modulus;
  }
  if (bound == 0) return periodic ? Consistency::inconsistent : Consistency::consistent;
  if (!periodic) return Consistency::inconsistent;
  return bound % periodic->period == 0 ? Consistency::consistent : Consistency::inconsistent;
}

bool RunReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.passed; });
}

std::vector<std::string> RunReport::failing() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

nlohmann::json RunReport::to_json() const {
  nlohmann::json checks_json = nlohmann::json::object();
  for (const auto& c : checks) {
    checks_json[c.name] = {{"passed", c.passed}, {"detail", c.detail}};
  }
  nlohmann::json slopes_json = nlohmann::json::array();
  for (const auto& s : slopes) slopes_json.push_back({{"m", s.m}, {"t", s.t}, {"slope", s.slope}});
  nlohmann::json out{{"spec", spec_to_json(spec)},
                     {"n", n_max},
                     {"horizon", horizon},
                     {"classification", classification_to_json(classification)},
                     {"cycle", cycle_to_json(cycle)},
                     {"checks", checks_json},
                     {"skipped", skipped},
                     {"slopes", slopes_json},
                     {"passed", all_passed()}};
  out["drift"] = drift ? drift_to_json(*drift) : nlohmann::json(nullptr);
  return out;
}

RunReport verify_trajectory(const Trajectory& traj, std::int64_t horizon, std::size_t max_bits) {
  const SystemSpec& spec = traj.spec();
  RunReport report;
  report.spec = spec;
  report.n_max = traj.last_index();
  report.horizon = horizon;
  report.classification = classify(spec.p, spec.q);
  report.drift = drift(spec);

  const std::int64_t m = report.classification.block_modulus;
  const std::int64_t n_max = traj.last_index();
  auto add = [&](std::string name, bool passed, std::string detail = {}) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };

  add("product_invariant", product_invariant_check(traj), "(x_n y_n)(x_{n-q} y_{n-q}) = " + (spec.a * spec.b).str());

  if (n_max >= spec.p + spec.q) {
    add("x_relation", x_relation_check(traj), "x_n x_{n-q} = " + spec.c().str() + " x_{n-p} x_{n-p-q}");
  } else {
    report.skipped.push_back("x_relation: needs N >= p + q");
  }

  if (spec.a.abs() != spec.b.abs()) {
    report.skipped.push_back("second_difference: needs |a| = |b|");
  } else if (n_max < 2 * m + 1) {
    report.skipped.push_back("second_difference: needs N >= 2 lcm(p, 2q) + 1");
  } else {
    add("second_difference", second_difference_check(traj), "x_{n+2m} x_n = x_{n+m}^2, m = " + std::to_string(m));
  }

  if (!report.drift->block_ratio) {
    report.skipped.push_back("block_ratio: p/gcd(p, q) is even");
  } else if (n_max < m + 1) {
    report.skipped.push_back("block_ratio: needs N >= lcm(p, 2q) + 1");
  } else {
    add("block_ratio", block_ratio_check(traj),
        "x_{n+" + std::to_string(m) + "} / x_n = " + report.drift->block_ratio->str());
  }

  report.cycle = detect_cycle(spec, horizon, max_bits);
  const Consistency agreement = assess_agreement(report.classification, spec, report.cycle);
  add("classifier_detector_agreement", agreement != Consistency::inconsistent, to_string(agreement));

  const std::int64_t w = report.classification.witness_modulus;
  for (std::int64_t t = 0; t < w && t + 2 * w <= n_max; ++t) {
    report.slopes.push_back({w, t, growth_slope(traj, w, t)});
  }
  return report;
}

RunReport run_verify(const SystemSpec& spec, std::int64_t n_max, std::int64_t horizon, std::size_t max_bits) {
  return verify_trajectory(simulate(spec, n_max, Backend::exact, max_bits), horizon, max_bits);
}

namespace {

SweepRow sweep_row(const SweepConfig& config, std::int64_t p, std::int64_t q) {
  SweepRow row;
  row.p = p;
  row.q = q;
  row.horizon = config.horizon.value_or(default_horizon(p, q));
  row.classification = classify(p, q);
  std::seed_seq seq{config.seed, static_cast<std::uint64_t>(p), static_cast<std::uint64_t>(q)};
  std::mt19937_64 rng(seq);
  for (int trial = 0; trial < config.trials; ++trial) {
    const SystemSpec spec = random_positive_spec(p, q, ExactRational(1), ExactRational(1), rng);
    row.trials.push_back(detect_cycle(spec, row.horizon, config.max_bits));
    const Consistency c = assess_agreement(row.classification, spec, row.trials.back());
    row.status = std::max(row.status, c);
  }
  return row;
}

}  // namespace

std::vector<SweepRow> run_sweep(const SweepConfig& config) {
  std::vector<std::pair<std::int64_t, std::int64_t>> grid;
  for (std::int64_t p = std::max<std::int64_t>(1, config.p_min); p <= config.p_max; ++p) {
    for (std::int64_t q = p + 1; q <= config.q_max; ++q) grid.emplace_back(p, q);
  }
  std::vector<SweepRow> rows(grid.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        rows[i] = sweep_row(config, grid[i].first, grid[i].second);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };

  unsigned threads = config.threads != 0 ? config.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(grid.size(), 1)));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  return rows;
}

nlohmann::json sweep_to_json(const SweepConfig& config, const std::vector<SweepRow>& rows) {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json trials = nlohmann::json::array();
    for (const auto& t : row.trials) trials.push_back(cycle_to_json(t));
    rows_json.push_back({{"p", row.p},
                         {"q", row.q},
                         {"horizon", row.horizon},
                         {"classification", classification_to_json(row.classification)},
                         {"trials", trials},
                         {"status", to_string(row.status)}});
  }
  return {{"seed", config.seed}, {"trials", config.trials}, {"rows", rows_json}};
}

}  // namespace perisys
