// Acceptance suite: one line per criterion, nonzero exit when any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "perisys/closedform.hpp"
#include "perisys/cycle.hpp"
#include "perisys/report.hpp"
#include "perisys/simulator.hpp"
#include "perisys/spectral.hpp"

using namespace perisys;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool passed = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

const ExactRational kOne(1L);

// 1. p=6, q=10: 20 seeded specs, horizon 5000, pi | 60 in 20/20, pi = 60 in >= 18/20, < 5 s.
Outcome figure3_periodicity() {
  const auto start = Clock::now();
  std::mt19937_64 rng(1001);
  int divides = 0;
  int exact = 0;
  for (int i = 0; i < 20; ++i) {
    const CycleResult r = detect_cycle(random_positive_spec(6, 10, kOne, kOne, rng), 5000);
    if (const auto* hit = std::get_if<Periodic>(&r)) {
      divides += 60 % hit->period == 0 ? 1 : 0;
      exact += hit->period == 60 ? 1 : 0;
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << "divides 60: " << divides << "/20, equals 60: " << exact << "/20, " << elapsed << " s";
  return {divides == 20 && exact >= 18 && elapsed < 5.0, d.str()};
}

// 2. p=60, q=84: 5 specs, horizon 20000, pi | 840 in 5/5, pi = 840 in >= 4/5, < 60 s.
Outcome figure4_periodicity() {
  const auto start = Clock::now();
  std::mt19937_64 rng(1002);
  int divides = 0;
  int exact = 0;
  for (int i = 0; i < 5; ++i) {
    const CycleResult r = detect_cycle(random_positive_spec(60, 84, kOne, kOne, rng), 20000);
    if (const auto* hit = std::get_if<Periodic>(&r)) {
      divides += 840 % hit->period == 0 ? 1 : 0;
      exact += hit->period == 840 ? 1 : 0;
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << "divides 840: " << divides << "/5, equals 840: " << exact << "/5, " << elapsed << " s";
  return {divides == 5 && exact >= 4 && elapsed < 60.0, d.str()};
}

// 3. (2,3) and (4,6): 10 specs each, no cycle within 10000, |slope| > 1e-6 on the
//    witness subsequence in >= 9/10 per pair.
Outcome nonperiodic_regimes() {
  std::mt19937_64 rng(1003);
  bool ok = true;
  std::ostringstream d;
  for (auto [p, q] : {std::pair<std::int64_t, std::int64_t>{2, 3}, {4, 6}}) {
    const Classification c = classify(p, q);
    int no_cycle = 0;
    int sloped = 0;
    for (int i = 0; i < 10; ++i) {
      const SystemSpec spec = random_positive_spec(p, q, kOne, kOne, rng);
      const Trajectory traj = simulate(spec, 10000, Backend::exact);
      no_cycle += std::holds_alternative<NoCycleWithinHorizon>(detect_cycle(traj)) ? 1 : 0;
      sloped += std::fabs(growth_slope(traj, c.witness_modulus, 0)) > 1e-6 ? 1 : 0;
    }
    ok = ok && no_cycle == 10 && sloped >= 9;
    d << "(" << p << "," << q << ") no-cycle " << no_cycle << "/10, |slope|>1e-6 " << sloped << "/10; ";
  }
  return {ok, d.str()};
}

// 4. Three repeated-root tests agree for 1 <= p < q <= 64 in < 5 s.
Outcome repeated_root_agreement() {
  const auto start = Clock::now();
  int mismatches = 0;
  int pairs = 0;
  for (std::int64_t q = 2; q <= 64; ++q) {
    for (std::int64_t p = 1; p < q; ++p) {
      const bool a = has_repeated_root(p, q);
      const bool b = has_repeated_root_by_intersection(p, q);
      const bool c = has_repeated_root_by_valuation(p, q);
      mismatches += (a != b || b != c) ? 1 : 0;
      ++pairs;
    }
  }
  const double elapsed = seconds_since(start);
  std::ostringstream d;
  d << pairs << " pairs, " << mismatches << " mismatches, " << elapsed << " s";
  return {mismatches == 0 && elapsed < 5.0, d.str()};
}

// 5. Sweep 2 <= p < q <= 24, 3 trials, default horizon; no INCONSISTENT row.
Outcome sweep_consistency() {
  SweepConfig config;
  config.p_min = 2;
  config.p_max = 24;
  config.q_max = 24;
  config.trials = 3;
  config.seed = 1005;
  const auto rows = run_sweep(config);
  int consistent = 0;
  int degenerate = 0;
  int inconsistent = 0;
  std::string bad;
  bool covers_odd = false;
  bool covers_divides = false;
  for (const auto& row : rows) {
    switch (row.status) {
      case Consistency::consistent:
        ++consistent;
        break;
      case Consistency::consistent_degenerate:
        ++degenerate;
        break;
      case Consistency::inconsistent:
        ++inconsistent;
        bad += " (" + std::to_string(row.p) + "," + std::to_string(row.q) + ")";
        break;
    }
    if (row.p == 3 && row.q == 5) covers_odd = row.classification.predicted_period() == 30;
    if (row.p == 3 && row.q == 6) covers_divides = row.classification.predicted_period() == 12;
  }
  std::ostringstream d;
  d << rows.size() << " rows: " << consistent << " consistent, " << degenerate << " degenerate, " << inconsistent
    << " inconsistent" << bad;
  return {inconsistent == 0 && covers_odd && covers_divides && rows.size() == 253, d.str()};
}

// 6. Product invariant, x-relation and second-difference identity, exact, over
//    50 random specs with |b| = |a| (plus 50 with unrelated a, b for the first
//    two), N = 300.
Outcome conservation_suite() {
  std::mt19937_64 rng(1006);
  int product = 0;
  int relation = 0;
  int second = 0;
  int total = 0;
  for (int i = 0; i < 50; ++i) {
    std::int64_t p = 0;
    std::int64_t q = 0;
    do {
      p = static_cast<std::int64_t>(1 + rng() % 12);
      q = static_cast<std::int64_t>(1 + rng() % 12);
    } while (2 * std::lcm(p, 2 * q) + 1 > 300);
    SystemSpec spec = oracle::random_signed_spec(p, q, rng);
    spec.b = (rng() & 1U) ? spec.a : -spec.a;
    const Trajectory traj = simulate(spec, 300, Backend::exact);
    product += product_invariant_check(traj) ? 1 : 0;
    relation += x_relation_check(traj) ? 1 : 0;
    second += second_difference_check(traj) ? 1 : 0;
    ++total;

    SystemSpec general = oracle::random_signed_spec(static_cast<std::int64_t>(1 + rng() % 12),
                                                    static_cast<std::int64_t>(1 + rng() % 12), rng);
    const Trajectory other = simulate(general, 300, Backend::exact);
    product += product_invariant_check(other) ? 1 : 0;
    relation += x_relation_check(other) ? 1 : 0;
  }
  std::ostringstream d;
  d << "product " << product << "/" << 2 * total << ", x-relation " << relation << "/" << 2 * total
    << ", second difference " << second << "/" << total;
  return {product == 2 * total && relation == 2 * total && second == total, d.str()};
}

// 7. p=6, q=10, a=1, b=2: x_{n+60}/x_n = 1/32 for 1 <= n <= 240 and Decreasing
//    on all 60 classes; a=2, b=1 gives ratio 32 and Increasing.
Outcome appendix_drift() {
  std::mt19937_64 rng(1007);
  bool ok = true;
  std::ostringstream d;
  for (auto [a, b, want_ratio, want_trend] :
       {std::tuple{1L, 2L, "1/32", Monotonicity::decreasing}, std::tuple{2L, 1L, "32", Monotonicity::increasing}}) {
    const SystemSpec spec = random_positive_spec(6, 10, ExactRational(a), ExactRational(b), rng);
    const Trajectory traj = simulate(spec, 300, Backend::exact);
    const ExactRational ratio = ExactRational::parse(want_ratio);
    int ratio_hits = 0;
    for (std::int64_t n = 1; n <= 240; ++n) ratio_hits += traj.x(n + 60) / traj.x(n) == ratio ? 1 : 0;
    int trend_hits = 0;
    for (std::int64_t t = 0; t < 60; ++t) trend_hits += monotone_check(traj, 60, t) == want_trend ? 1 : 0;
    ok = ok && ratio_hits == 240 && trend_hits == 60;
    d << "c=" << a << "/" << b << ": ratio " << want_ratio << " " << ratio_hits << "/240, " << to_string(want_trend)
      << " " << trend_hits << "/60; ";
  }
  return {ok, d.str()};
}

// 8. Exact vs signed-log: same signs, |dlog| <= 1e-9 max(1, |log|), N = 500, 20 specs.
Outcome backend_agreement() {
  std::mt19937_64 rng(1008);
  std::int64_t compared = 0;
  std::int64_t sign_mismatch = 0;
  std::int64_t log_mismatch = 0;
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const auto p = static_cast<std::int64_t>(1 + rng() % 12);
    const auto q = static_cast<std::int64_t>(1 + rng() % 12);
    const SystemSpec spec = oracle::random_signed_spec(p, q, rng);
    const Trajectory exact = simulate(spec, 500, Backend::exact);
    const Trajectory logs = simulate(spec, 500, Backend::signed_log);
    for (std::int64_t n = exact.first_index(); n <= 500; ++n) {
      for (Which w : {Which::x, Which::y}) {
        const SignedLog e = exact.log_value(w, n);
        const SignedLog l = logs.log_value(w, n);
        sign_mismatch += e.sign != l.sign ? 1 : 0;
        const double rel = std::fabs(e.logmag - l.logmag) / std::max(1.0, std::fabs(e.logmag));
        worst = std::max(worst, rel);
        log_mismatch += rel > 1e-9 ? 1 : 0;
        ++compared;
      }
    }
  }
  std::ostringstream d;
  d << compared << " values, sign mismatches " << sign_mismatch << ", log mismatches " << log_mismatch
    << ", worst relative " << worst;
  return {sign_mismatch == 0 && log_mismatch == 0, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"AC1 figure 3 period 60", figure3_periodicity},
      {"AC2 figure 4 period 840", figure4_periodicity},
      {"AC3 figures 1 and 5 non-periodic", nonperiodic_regimes},
      {"AC4 repeated-root triple agreement", repeated_root_agreement},
      {"AC5 sweep consistency", sweep_consistency},
      {"AC6 exact conservation suite", conservation_suite},
      {"AC7 drift ratio and monotonicity", appendix_drift},
      {"AC8 backend agreement", backend_agreement},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    failures += outcome.passed ? 0 : 1;
    std::printf("[%s] %s (%.2f s): %s\n", outcome.passed ? "PASS" : "FAIL", name, seconds_since(start),
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
