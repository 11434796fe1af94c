#pragma once

// Independent reference computations used only by the tests. None of these
// route through the library code paths they are used to check.

#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "perisys/model.hpp"
#include "perisys/rational.hpp"

namespace oracle {

/// ln|num/den| computed with MPFR at 2 * bit length + 256 bits of precision,
/// rounded to nearest double.
double mpfr_log_abs(const mpz_class& num, const mpz_class& den);

/// Distance between adjacent doubles around `value`.
double ulp(double value);

/// Direct evaluation of the recurrence on raw mpq_class values with a plain
/// index map. Returns (x, y) keyed by index for -L+1 ... n_max.
struct NaiveSolution {
  std::map<std::int64_t, mpq_class> x, y;
};
NaiveSolution naive_solve(const perisys::SystemSpec& spec, std::int64_t n_max);

/// Roots of lambda^p = 1 and lambda^q = -1 as complex doubles, matched by
/// distance. Returns the turn position in [0, 1) of every shared root.
std::vector<double> shared_root_turns(std::int64_t p, std::int64_t q);

/// Random nonzero rational with numerator/denominator up to `bits` bits.
perisys::ExactRational random_rational(std::mt19937_64& rng, int bits, bool allow_negative = true);

/// Random spec with arbitrary-sign values, numerators and denominators 1..16.
perisys::SystemSpec random_signed_spec(std::int64_t p, std::int64_t q, std::mt19937_64& rng);

}  // namespace oracle
