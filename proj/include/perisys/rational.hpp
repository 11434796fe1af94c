#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace perisys {

/// Default cap on the bit length of a numerator or denominator produced during
/// simulation. Overridable per call and through PERISYS_MAX_BITS in the CLI.
inline constexpr std::size_t kDefaultMaxBits = 1'000'000;

/// Exact rational number in canonical form: denominator > 0,
/// gcd(|numerator|, denominator) = 1, zero stored as 0/1.
///
/// Values are immutable once built; every operation returns a new canonical
/// value. Backed by GMP's mpq_t.
class ExactRational {
 public:
  ExactRational() = default;
  ExactRational(long value);  // NOLINT(google-explicit-constructor)
  /// Throws DivisionByZero when `denominator` is zero.
  ExactRational(const mpz_class& numerator, const mpz_class& denominator);

  /// Parses the rational literal syntax: optional sign, decimal digits,
  /// optionally "/" and a positive decimal integer. No whitespace.
  /// Throws SyntaxError on anything else (including a zero denominator).
  static ExactRational parse(std::string_view literal);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }

  /// Larger of the bit lengths of numerator and denominator.
  std::size_t bit_length() const;

  /// Canonical literal, e.g. "-3/7" or "2".
  std::string str() const;

  std::size_t hash() const;

  /// Nearest double (may be inf/0 for huge magnitudes).
  double to_double() const { return value_.get_d(); }

  ExactRational operator-() const;
  ExactRational abs() const;
  ExactRational reciprocal() const;
  /// Integer power; negative exponents invert. 0^e for e < 0 throws.
  ExactRational pow(std::int64_t exponent) const;

  friend ExactRational operator+(const ExactRational& lhs, const ExactRational& rhs);
  friend ExactRational operator-(const ExactRational& lhs, const ExactRational& rhs);
  friend ExactRational operator*(const ExactRational& lhs, const ExactRational& rhs);
  /// Throws DivisionByZero when `rhs` is zero.
  friend ExactRational operator/(const ExactRational& lhs, const ExactRational& rhs);

  friend bool operator==(const ExactRational& lhs, const ExactRational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRational& lhs, const ExactRational& rhs) {
    int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  explicit ExactRational(mpq_class value) : value_(std::move(value)) {}

  mpq_class value_{0};
};

/// Throws BitLengthExceeded when `value` exceeds `max_bits` in either component.
void enforce_bit_cap(const ExactRational& value, std::size_t max_bits);

std::size_t hash_value(const mpz_class& z);

}  // namespace perisys

template <>
struct std::hash<perisys::ExactRational> {
  std::size_t operator()(const perisys::ExactRational& r) const noexcept { return r.hash(); }
};
