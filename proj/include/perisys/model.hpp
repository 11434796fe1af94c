#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "perisys/rational.hpp"

namespace perisys {

/// Parameters and initial data of the system
///
///   x_n = a / y_{n-p},   y_n = b * y_{n-p} / (x_{n-q} * y_{n-q}).
///
/// Initial data covers indices -L+1 ... 0 with L = history() = max(p, q),
/// ascending, so x_init.back() is x_0. Values for n >= 1 are generated.
struct SystemSpec {
  ExactRational a{1};
  ExactRational b{1};
  std::int64_t p = 1;
  std::int64_t q = 1;
  std::vector<ExactRational> x_init;
  std::vector<ExactRational> y_init;

  std::int64_t history() const { return p > q ? p : q; }
  std::int64_t first_index() const { return 1 - history(); }
  ExactRational c() const { return a / b; }

  friend bool operator==(const SystemSpec&, const SystemSpec&) = default;
};

enum class ValidationMode { strict, general };

struct Violation {
  std::string rule;
  std::string message;
};

struct ValidationReport {
  ValidationMode mode = ValidationMode::general;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

/// Parses the JSON spec document. Throws SyntaxError for malformed JSON or
/// rational literals, ShapeError for missing keys, wrong types, non-positive
/// p/q or initial lists whose length differs from max(p, q), and ZeroValue
/// for a zero among a, b and the initial values.
SystemSpec parse_spec(std::string_view text);
SystemSpec load_spec_file(const std::string& path);

nlohmann::json spec_to_json(const SystemSpec& spec);
std::string serialize_spec(const SystemSpec& spec);

/// Rules: "p-positive", "q-positive", "init-length", "nonzero" in both modes;
/// strict mode adds "p-lt-q" and "p-not-divides-q".
ValidationReport validate(const SystemSpec& spec, ValidationMode mode);

std::string to_string(ValidationMode mode);

/// Spec with the given parameters and positive random initial values whose
/// numerators and denominators are uniform on 1..16.
SystemSpec random_positive_spec(std::int64_t p, std::int64_t q, const ExactRational& a, const ExactRational& b,
                                std::mt19937_64& rng);

/// Spec whose initial values are all 1.
SystemSpec constant_spec(std::int64_t p, std::int64_t q, const ExactRational& a, const ExactRational& b);

}  // namespace perisys
