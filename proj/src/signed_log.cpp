#include "perisys/signed_log.hpp"

#include <cmath>

#include "perisys/errors.hpp"

namespace perisys {

namespace {

constexpr long double kLn2 = 0.693147180559945309417232121458176568L;

// |z| ~= mantissa * 2^exponent with mantissa in [2^63, 2^64), truncated.
struct Top64 {
  long double mantissa;
  long exponent;
};

Top64 top64(const mpz_class& z) {
  mpz_class magnitude = abs(z);
  const long bits = static_cast<long>(mpz_sizeinbase(magnitude.get_mpz_t(), 2));
  const long shift = bits - 64;
  if (shift > 0) {
    mpz_fdiv_q_2exp(magnitude.get_mpz_t(), magnitude.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  } else if (shift < 0) {
    mpz_mul_2exp(magnitude.get_mpz_t(), magnitude.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
  }
  static_assert(sizeof(unsigned long) == 8, "expects LP64");
  return {static_cast<long double>(mpz_get_ui(magnitude.get_mpz_t())), shift};
}

// Approximates |num| / den for num != 0.
long double ratio(const mpz_class& num, const mpz_class& den, long* exponent) {
  Top64 n = top64(num);
  Top64 d = top64(den);
  *exponent = n.exponent - d.exponent;
  return n.mantissa / d.mantissa;
}

}  // namespace

SignedLog sl_combine(SlOp op, const SignedLog& u, const SignedLog& v) {
  return {u.sign * v.sign, op == SlOp::mul ? u.logmag + v.logmag : u.logmag - v.logmag};
}

SignedLog to_signed_log(const ExactRational& r) {
  if (r.is_zero()) throw ZeroValue("logarithm of zero");
  const mpz_class num = abs(r.numerator());
  const mpz_class den = r.denominator();

  long double log_abs;
  if (num <= 2 * den && den <= 2 * num) {
    const mpz_class offset = num - den;
    if (offset == 0) {
      log_abs = 0.0L;
    } else {
      long exponent = 0;
      long double t = ratio(offset, den, &exponent);
      t = std::ldexp(t, static_cast<int>(exponent));
      log_abs = std::log1p(offset < 0 ? -t : t);
    }
  } else {
    long exponent = 0;
    const long double rho = ratio(num, den, &exponent);
    log_abs = std::log(rho) + static_cast<long double>(exponent) * kLn2;
  }
  return {r.sign(), static_cast<double>(log_abs)};
}

}  // namespace perisys
