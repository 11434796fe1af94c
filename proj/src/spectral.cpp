#include "perisys/spectral.hpp"

#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include "perisys/errors.hpp"

namespace perisys {

namespace {

void require_positive(std::int64_t p, std::int64_t q) {
  if (p < 1 || q < 1) throw std::invalid_argument("p and q must be positive");
}

}  // namespace

TurnFraction TurnFraction::reduced(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) throw std::invalid_argument("turn denominator must be positive");
  std::int64_t k = numerator % denominator;
  if (k < 0) k += denominator;
  if (k == 0) return {0, 1};
  const std::int64_t g = std::gcd(k, denominator);
  return {k / g, denominator / g};
}

int SpectrumReport::total_degree() const {
  int total = 0;
  for (const auto& r : roots) total += r.multiplicity;
  return total;
}

std::vector<TurnFraction> SpectrumReport::repeated() const {
  std::vector<TurnFraction> out;
  for (const auto& r : roots) {
    if (r.multiplicity > 1) out.push_back(r.root);
  }
  return out;
}

int two_adic_valuation(std::int64_t n) {
  if (n == 0) throw std::invalid_argument("v2(0) is undefined");
  return std::countr_zero(static_cast<std::uint64_t>(n < 0 ? -n : n));
}

Decomposition decompose(std::int64_t p, std::int64_t q) {
  require_positive(p, q);
  Decomposition d;
  d.g = std::gcd(p, q);
  d.r = two_adic_valuation(d.g);
  d.u = d.g >> d.r;
  d.s = p / d.g;
  d.t = q / d.g;
  return d;
}

SpectrumReport enumerate_roots(std::int64_t p, std::int64_t q) {
  require_positive(p, q);
  std::map<TurnFraction, int> multiset;
  for (std::int64_t l = 0; l < p; ++l) ++multiset[TurnFraction::reduced(l, p)];
  for (std::int64_t k = 0; k < q; ++k) ++multiset[TurnFraction::reduced(2 * k + 1, 2 * q)];
  SpectrumReport report;
  report.roots.reserve(multiset.size());
  for (const auto& [root, multiplicity] : multiset) report.roots.push_back({root, multiplicity});
  return report;
}

bool has_repeated_root(std::int64_t p, std::int64_t q) {
  const Decomposition d = decompose(p, q);
  for (std::int64_t k = 0; k < q; ++k) {
    for (std::int64_t l = 0; l < p; ++l) {
      if ((2 * k + 1) * d.s == 2 * l * d.t) return true;
    }
  }
  return false;
}

bool has_repeated_root_by_intersection(std::int64_t p, std::int64_t q) {
  return !enumerate_roots(p, q).repeated().empty();
}

bool has_repeated_root_by_valuation(std::int64_t p, std::int64_t q) {
  require_positive(p, q);
  return two_adic_valuation(p) > two_adic_valuation(q);
}

std::int64_t predicted_period(std::int64_t p, std::int64_t q) {
  if (has_repeated_root(p, q)) {
    throw NotPeriodicRegime("P(lambda) has a repeated root for p=" + std::to_string(p) + ", q=" + std::to_string(q));
  }
  return std::lcm(p, 2 * q);
}

Classification classify(std::int64_t p, std::int64_t q) {
  const Decomposition d = decompose(p, q);
  Classification c;
  c.p = p;
  c.q = q;
  c.block_modulus = std::lcm(p, 2 * q);
  c.witness_modulus = c.block_modulus;
  const bool repeated = has_repeated_root(p, q);
  c.regime = repeated ? Regime::generically_unbounded : Regime::eventually_periodic;

  if (p % 2 != 0) {
    c.reason = Reason::p_odd;
  } else if (d.g == 1) {
    c.reason = Reason::coprime_q_odd;
    c.witness_modulus = 2 * p * q;
  } else if (d.s % 2 != 0) {
    c.reason = Reason::odd_quotient;
  } else {
    c.reason = Reason::even_quotient;
  }
  return c;
}

std::int64_t Classification::predicted_period() const {
  if (!periodic()) throw NotPeriodicRegime("classification is " + to_string(regime));
  return block_modulus;
}

std::string Classification::summary() const {
  if (periodic()) return to_string(regime) + " period=" + std::to_string(block_modulus);
  std::string line = to_string(regime) + " witness=" + std::to_string(witness_modulus);
  if (reason != Reason::coprime_q_odd) line += " (lcm)";
  return line;
}

std::string to_string(Regime regime) {
  return regime == Regime::eventually_periodic ? "EventuallyPeriodic" : "GenericallyUnbounded";
}

std::string to_string(Reason reason) {
  switch (reason) {
    case Reason::coprime_q_odd:
      return "coprime-q-odd";
    case Reason::odd_quotient:
      return "odd-quotient";
    case Reason::even_quotient:
      return "even-quotient";
    case Reason::p_odd:
      return "p-odd";
  }
  return "unknown";
}

nlohmann::json classification_to_json(const Classification& c) {
  nlohmann::json out{{"p", c.p},
                     {"q", c.q},
                     {"regime", to_string(c.regime)},
                     {"reason", to_string(c.reason)},
                     {"block_modulus", c.block_modulus}};
  if (c.periodic()) {
    out["predicted_period"] = c.block_modulus;
  } else {
    out["witness_modulus"] = c.witness_modulus;
  }
  return out;
}

nlohmann::json spectrum_to_json(const SpectrumReport& report) {
  nlohmann::json roots = nlohmann::json::array();
  for (const auto& r : report.roots) roots.push_back({{"turn", r.root.str()}, {"multiplicity", r.multiplicity}});
  return {{"roots", roots}, {"degree", report.total_degree()}};
}

}  // namespace perisys
