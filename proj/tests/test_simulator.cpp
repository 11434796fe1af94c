#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "perisys/errors.hpp"
#include "perisys/simulator.hpp"

using namespace perisys;

namespace {

SystemSpec figure1_hand_spec() {
  return parse_spec(R"({"a":"1","b":"1","p":2,"q":3,"x_init":["1","1","1"],"y_init":["2","3","5"]})");
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("fixed point stays at one") {
  for (auto [p, q] : {std::pair{2, 3}, std::pair{6, 10}, std::pair{3, 3}, std::pair{5, 2}}) {
    const Trajectory traj = simulate(constant_spec(p, q, ExactRational(1L), ExactRational(1L)), 100, Backend::exact);
    CHECK(traj.last_index() == 100);
    for (std::int64_t n = traj.first_index(); n <= 100; ++n) {
      CHECK(traj.x(n) == ExactRational(1L));
      CHECK(traj.y(n) == ExactRational(1L));
    }
  }
}

TEST_CASE("first step by hand") {
  const Trajectory traj = simulate(figure1_hand_spec(), 1, Backend::exact);
  // x_1 = 1 / y_{-1}, y_1 = y_{-1} / (x_{-2} y_{-2})
  CHECK(traj.x(1).str() == "1/3");
  CHECK(traj.y(1).str() == "3/2");
}

TEST_CASE("trajectory matches the naive evaluator") {
  std::mt19937_64 rng(101);
  for (int i = 0; i < 40; ++i) {
    const auto p = static_cast<std::int64_t>(1 + rng() % 8);
    const auto q = static_cast<std::int64_t>(1 + rng() % 8);
    const SystemSpec spec = oracle::random_signed_spec(p, q, rng);
    const Trajectory traj = simulate(spec, 60, Backend::exact);
    const oracle::NaiveSolution naive = oracle::naive_solve(spec, 60);
    for (std::int64_t n = traj.first_index(); n <= 60; ++n) {
      CHECK(traj.x(n).raw() == naive.x.at(n));
      CHECK(traj.y(n).raw() == naive.y.at(n));
    }
  }
}

TEST_CASE("exact and signed-log backends agree") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 5; ++i) {
    const SystemSpec spec = random_positive_spec(6, 10, ExactRational(1L), ExactRational(1L), rng);
    const Trajectory exact = simulate(spec, 200, Backend::exact);
    const Trajectory logs = simulate(spec, 200, Backend::signed_log);
    for (std::int64_t n = exact.first_index(); n <= 200; ++n) {
      const SignedLog e = exact.log_x(n);
      const SignedLog l = logs.log_x(n);
      CHECK(e.sign == l.sign);
      CHECK(std::fabs(e.logmag - l.logmag) <= 1e-9 * std::max(1.0, std::fabs(e.logmag)));
    }
  }
  CHECK_THROWS_AS(simulate(figure1_hand_spec(), 5, Backend::signed_log).x(1), WrongBackend);
}

TEST_CASE("conservation laws") {
  SUBCASE("fixed point") {
    const Trajectory traj = simulate(constant_spec(2, 3, ExactRational(1L), ExactRational(1L)), 20, Backend::exact);
    CHECK(product_invariant_check(traj));
    CHECK(x_relation_check(traj));
  }
  SUBCASE("random signed specs") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 60; ++i) {
      const auto p = static_cast<std::int64_t>(1 + rng() % 12);
      const auto q = static_cast<std::int64_t>(1 + rng() % 12);
      const SystemSpec spec = oracle::random_signed_spec(p, q, rng);
      const Trajectory traj = simulate(spec, 150, Backend::exact);
      CHECK(product_invariant_check(traj));
      CHECK(x_relation_check(traj));
    }
  }
  SUBCASE("c = 1/2 carries the factor") {
    std::mt19937_64 rng(4);
    const SystemSpec spec = random_positive_spec(2, 3, ExactRational(1L), ExactRational(2L), rng);
    Trajectory traj = simulate(spec, 80, Backend::exact);
    CHECK(x_relation_check(traj));
    // Same trajectory read with the homogeneous relation must fail.
    SystemSpec homogeneous = spec;
    homogeneous.b = ExactRational(1L);
    bool plain_holds = true;
    for (std::int64_t n = 4; n <= 80; ++n) {
      plain_holds = plain_holds && traj.x(n) * traj.x(n - 3) == traj.x(n - 2) * traj.x(n - 5);
    }
    CHECK_FALSE(plain_holds);
  }
  SUBCASE("the relation holds from n = max(p, q) + 1 only") {
    // x_{n-q} is initial data below that index, so the relation is generically false there.
    const SystemSpec spec =
        parse_spec(R"({"a":"1","b":"1","p":2,"q":3,"x_init":["2","3","5"],"y_init":["7","11","13"]})");
    const Trajectory traj = simulate(spec, 10, Backend::exact);
    const std::int64_t n = 3;
    CHECK(traj.x(n) * traj.x(n - 3) != traj.x(n - 2) * traj.x(n - 5));
    CHECK(x_relation_check(traj));
  }
  SUBCASE("mutation is caught") {
    std::mt19937_64 rng(9);
    Trajectory traj = simulate(random_positive_spec(4, 6, ExactRational(1L), ExactRational(1L), rng), 100,
                               Backend::exact);
    traj.overwrite(Which::x, 50, traj.x(50) * ExactRational(2L));
    CHECK_FALSE(product_invariant_check(traj));
    CHECK_FALSE(x_relation_check(traj));
  }
  SUBCASE("wrong backend") {
    const Trajectory traj = simulate(figure1_hand_spec(), 10, Backend::signed_log);
    CHECK_THROWS_AS(product_invariant_check(traj), WrongBackend);
    CHECK_THROWS_AS(x_relation_check(traj), WrongBackend);
  }
}

TEST_CASE("no zeros and determinism") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 30; ++i) {
    const auto p = static_cast<std::int64_t>(1 + rng() % 12);
    const auto q = static_cast<std::int64_t>(1 + rng() % 12);
    const SystemSpec spec = oracle::random_signed_spec(p, q, rng);
    const Trajectory first = simulate(spec, 120, Backend::exact);
    const Trajectory second = simulate(spec, 120, Backend::exact);
    for (std::int64_t n = first.first_index(); n <= 120; ++n) {
      CHECK_FALSE(first.x(n).is_zero());
      CHECK_FALSE(first.y(n).is_zero());
      CHECK(first.x(n) == second.x(n));
      CHECK(first.y(n) == second.y(n));
    }
  }
}

TEST_CASE("bit cap aborts unbounded growth") {
  std::mt19937_64 rng(2);
  const SystemSpec spec = random_positive_spec(2, 3, ExactRational(1L), ExactRational(1L), rng);
  CHECK_THROWS_AS(simulate(spec, 2000, Backend::exact, 64), BitLengthExceeded);
  CHECK_NOTHROW(simulate(spec, 2000, Backend::signed_log, 64));
}

TEST_CASE("subsequence") {
  std::mt19937_64 rng(13);
  const SystemSpec spec = random_positive_spec(2, 3, ExactRational(1L), ExactRational(1L), rng);
  const Trajectory traj = simulate(spec, 120, Backend::exact);

  const auto all = subsequence(traj, 1, 0, Which::x);
  REQUIRE(all.size() == 121);
  CHECK(all.front() == traj.x(0));

  const auto every12 = subsequence(traj, 12, 0, Which::x);
  REQUIRE(every12.size() == 11);
  for (std::size_t k = 0; k < every12.size(); ++k) CHECK(every12[k] == traj.x(static_cast<std::int64_t>(12 * k)));

  const auto ys = subsequence(traj, 12, 5, Which::y);
  CHECK(ys.front() == traj.y(5));
  CHECK(ys.back() == traj.y(113));

  const Trajectory fixed = simulate(constant_spec(2, 3, ExactRational(1L), ExactRational(1L)), 50, Backend::exact);
  for (const auto& v : subsequence(fixed, 7, 3, Which::y)) CHECK(v == ExactRational(1L));

  CHECK_THROWS(subsequence(traj, 0, 0, Which::x));
  CHECK_THROWS(subsequence(traj, 4, 4, Which::x));
}

TEST_CASE("CSV export") {
  const Trajectory traj = simulate(figure1_hand_spec(), 4, Backend::exact);
  std::ostringstream out;
  write_csv(out, traj);
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 5);
  CHECK(lines[0] == "n,x,y,sign_x,log_abs_x,sign_y,log_abs_y");
  CHECK(lines[1].rfind("1,1/3,3/2,1,", 0) == 0);
  CHECK(std::stod(lines[1].substr(lines[1].find(",1,") + 3)) == doctest::Approx(-std::log(3.0)).epsilon(1e-15));

  const Trajectory logs = simulate(figure1_hand_spec(), 4, Backend::signed_log);
  std::ostringstream log_out;
  write_csv(log_out, logs);
  CHECK(lines_of(log_out.str())[1].rfind("1,,,1,", 0) == 0);

  CHECK(format_log(0.1) == "0.10000000000000001");
  const auto json = trajectory_to_json(traj);
  CHECK(json["rows"].size() == 4);
  CHECK(json["rows"][0]["x"] == "1/3");
  CHECK(parse_spec(json["spec"].dump()) == traj.spec());
}
