#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace perisys {

/// Root of unity exp(2 pi i k / d), stored as the reduced fraction k/d with
/// 0 <= k < d (zero is 0/1).
struct TurnFraction {
  std::int64_t k = 0;
  std::int64_t d = 1;

  /// Reduces `numerator / denominator` modulo 1.
  static TurnFraction reduced(std::int64_t numerator, std::int64_t denominator);

  std::string str() const { return std::to_string(k) + "/" + std::to_string(d); }

  friend bool operator==(const TurnFraction&, const TurnFraction&) = default;
  friend std::strong_ordering operator<=>(const TurnFraction& lhs, const TurnFraction& rhs) {
    // Compare k1/d1 against k2/d2 by cross-multiplication.
    return lhs.k * rhs.d <=> rhs.k * lhs.d;
  }
};

/// p = 2^r u s, q = 2^r u t with g = gcd(p, q) = 2^r u, u odd.
struct Decomposition {
  std::int64_t g = 1;
  int r = 0;
  std::int64_t u = 1;
  std::int64_t s = 1;
  std::int64_t t = 1;
};

struct RootMultiplicity {
  TurnFraction root;
  int multiplicity = 1;
};

/// Roots of P(lambda) = (lambda^p - 1)(lambda^q + 1), ascending by turn.
struct SpectrumReport {
  std::vector<RootMultiplicity> roots;

  int total_degree() const;
  std::vector<TurnFraction> repeated() const;
};

enum class Regime { eventually_periodic, generically_unbounded };

enum class Reason { coprime_q_odd, odd_quotient, even_quotient, p_odd };

struct Classification {
  std::int64_t p = 1;
  std::int64_t q = 1;
  Regime regime = Regime::eventually_periodic;
  Reason reason = Reason::p_odd;
  /// lcm(p, 2q): the period when periodic and the block length in general.
  std::int64_t block_modulus = 1;
  /// Step of the diverging subsequence when unbounded: 2pq for coprime
  /// (p, q), lcm(p, 2q) otherwise. Equal to block_modulus when periodic.
  std::int64_t witness_modulus = 1;

  bool periodic() const { return regime == Regime::eventually_periodic; }
  std::int64_t predicted_period() const;
  /// One line, e.g. "EventuallyPeriodic period=60".
  std::string summary() const;
};

std::string to_string(Regime regime);
std::string to_string(Reason reason);

int two_adic_valuation(std::int64_t n);

Decomposition decompose(std::int64_t p, std::int64_t q);

SpectrumReport enumerate_roots(std::int64_t p, std::int64_t q);

/// Searches (2k+1) s == 2 l t over k < q, l < p directly.
bool has_repeated_root(std::int64_t p, std::int64_t q);
/// Nonempty intersection of the root sets of lambda^p = 1 and lambda^q = -1.
bool has_repeated_root_by_intersection(std::int64_t p, std::int64_t q);
/// v2(p) > v2(q).
bool has_repeated_root_by_valuation(std::int64_t p, std::int64_t q);

/// lcm(p, 2q); throws NotPeriodicRegime when a repeated root exists.
std::int64_t predicted_period(std::int64_t p, std::int64_t q);

Classification classify(std::int64_t p, std::int64_t q);

nlohmann::json classification_to_json(const Classification& c);
nlohmann::json spectrum_to_json(const SpectrumReport& report);

}  // namespace perisys
