#include "perisys/rational.hpp"

#include <algorithm>
#include <string>

#include "perisys/errors.hpp"

namespace perisys {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

std::uint64_t mix(std::uint64_t h) {
  // splitmix64 finalizer
  h ^= h >> 30;
  h *= 0xbf58476d1ce4e5b9ULL;
  h ^= h >> 27;
  h *= 0x94d049bb133111ebULL;
  h ^= h >> 31;
  return h;
}

}  // namespace

ExactRational::ExactRational(long value) : value_(value) {}

ExactRational::ExactRational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

ExactRational ExactRational::parse(std::string_view literal) {
  std::string_view body = literal;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw SyntaxError("malformed rational literal '" + std::string(literal) + "'");
  }
  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) throw SyntaxError("zero denominator in rational literal '" + std::string(literal) + "'");
  if (negative) num = -num;
  return ExactRational(num, den);
}

std::size_t ExactRational::bit_length() const {
  return std::max(mpz_sizeinbase(value_.get_num_mpz_t(), 2), mpz_sizeinbase(value_.get_den_mpz_t(), 2));
}

std::string ExactRational::str() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_str();
}

std::size_t hash_value(const mpz_class& z) {
  const mpz_srcptr raw = z.get_mpz_t();
  std::uint64_t h = static_cast<std::uint64_t>(mpz_sgn(raw)) * 0x9e3779b97f4a7c15ULL;
  const std::size_t limbs = mpz_size(raw);
  for (std::size_t i = 0; i < limbs; ++i) {
    h = mix(h ^ static_cast<std::uint64_t>(mpz_getlimbn(raw, static_cast<mp_size_t>(i))));
  }
  return static_cast<std::size_t>(h);
}

std::size_t ExactRational::hash() const {
  return static_cast<std::size_t>(mix(hash_value(value_.get_num()) * 31 + hash_value(value_.get_den())));
}

ExactRational ExactRational::operator-() const { return ExactRational(mpq_class(-value_)); }

ExactRational ExactRational::abs() const { return ExactRational(mpq_class(::abs(value_))); }

ExactRational ExactRational::reciprocal() const {
  if (is_zero()) throw DivisionByZero("reciprocal of zero");
  return ExactRational(mpq_class(1 / value_));
}

ExactRational ExactRational::pow(std::int64_t exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  // Powers of coprime integers stay coprime.
  mpq_class out;
  out.get_num() = std::move(num);
  out.get_den() = std::move(den);
  return ExactRational(std::move(out));
}

ExactRational operator+(const ExactRational& lhs, const ExactRational& rhs) {
  return ExactRational(mpq_class(lhs.value_ + rhs.value_));
}

ExactRational operator-(const ExactRational& lhs, const ExactRational& rhs) {
  return ExactRational(mpq_class(lhs.value_ - rhs.value_));
}

ExactRational operator*(const ExactRational& lhs, const ExactRational& rhs) {
  return ExactRational(mpq_class(lhs.value_ * rhs.value_));
}

ExactRational operator/(const ExactRational& lhs, const ExactRational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero("division by zero");
  return ExactRational(mpq_class(lhs.value_ / rhs.value_));
}

void enforce_bit_cap(const ExactRational& value, std::size_t max_bits) {
  const std::size_t bits = value.bit_length();
  if (bits > max_bits) {
    throw BitLengthExceeded("value needs " + std::to_string(bits) + " bits, cap is " + std::to_string(max_bits));
  }
}

}  // namespace perisys
