#include "perisys/model.hpp"

#include <fstream>
#include <sstream>

#include "perisys/errors.hpp"

namespace perisys {

using nlohmann::json;

namespace {

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw ShapeError(std::string("missing key '") + key + "'");
  return *it;
}

ExactRational parse_rational_field(const json& node, const std::string& what) {
  if (!node.is_string()) throw ShapeError(what + " must be a rational literal string");
  ExactRational value = ExactRational::parse(node.get<std::string>());
  if (value.is_zero()) throw ZeroValue(what + " is zero");
  return value;
}

std::int64_t parse_positive_int(const json& node, const char* what) {
  if (!node.is_number_integer()) throw ShapeError(std::string(what) + " must be an integer");
  const auto value = node.get<std::int64_t>();
  if (value < 1) throw ShapeError(std::string(what) + " must be positive");
  return value;
}

std::vector<ExactRational> parse_initials(const json& node, const char* what, std::int64_t expected) {
  if (!node.is_array()) throw ShapeError(std::string(what) + " must be an array");
  if (static_cast<std::int64_t>(node.size()) != expected) {
    throw ShapeError(std::string(what) + " has " + std::to_string(node.size()) + " entries, expected " +
                     std::to_string(expected));
  }
  std::vector<ExactRational> out;
  out.reserve(node.size());
  for (std::size_t i = 0; i < node.size(); ++i) {
    out.push_back(parse_rational_field(node[i], std::string(what) + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json rationals_to_json(const std::vector<ExactRational>& values) {
  json arr = json::array();
  for (const auto& v : values) arr.push_back(v.str());
  return arr;
}

}  // namespace

SystemSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SyntaxError(std::string("spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ShapeError("spec must be a JSON object");

  SystemSpec spec;
  spec.a = parse_rational_field(require(doc, "a"), "a");
  spec.b = parse_rational_field(require(doc, "b"), "b");
  spec.p = parse_positive_int(require(doc, "p"), "p");
  spec.q = parse_positive_int(require(doc, "q"), "q");
  spec.x_init = parse_initials(require(doc, "x_init"), "x_init", spec.history());
  spec.y_init = parse_initials(require(doc, "y_init"), "y_init", spec.history());
  return spec;
}

SystemSpec load_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SyntaxError("cannot read spec file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

json spec_to_json(const SystemSpec& spec) {
  return json{{"a", spec.a.str()},
              {"b", spec.b.str()},
              {"p", spec.p},
              {"q", spec.q},
              {"x_init", rationals_to_json(spec.x_init)},
              {"y_init", rationals_to_json(spec.y_init)}};
}

std::string serialize_spec(const SystemSpec& spec) { return spec_to_json(spec).dump(); }

ValidationReport validate(const SystemSpec& spec, ValidationMode mode) {
  ValidationReport report;
  report.mode = mode;
  auto flag = [&](std::string rule, std::string message) {
    report.violations.push_back({std::move(rule), std::move(message)});
  };

  if (spec.p < 1) flag("p-positive", "p must be a positive integer");
  if (spec.q < 1) flag("q-positive", "q must be a positive integer");
  if (spec.p >= 1 && spec.q >= 1) {
    const auto expected = static_cast<std::size_t>(spec.history());
    if (spec.x_init.size() != expected || spec.y_init.size() != expected) {
      flag("init-length", "initial lists must hold max(p, q) = " + std::to_string(expected) + " values");
    }
  }
  if (spec.a.is_zero() || spec.b.is_zero()) flag("nonzero", "a and b must be nonzero");
  for (const auto* list : {&spec.x_init, &spec.y_init}) {
    for (const auto& v : *list) {
      if (v.is_zero()) {
        flag("nonzero", "initial values must be nonzero");
        break;
      }
    }
  }

  if (mode == ValidationMode::strict && spec.p >= 1 && spec.q >= 1) {
    if (spec.p >= spec.q) flag("p-lt-q", "strict mode requires p < q");
    if (spec.q % spec.p == 0) flag("p-not-divides-q", "strict mode requires p not dividing q");
  }
  return report;
}

std::string ValidationReport::describe() const {
  std::string out = "validation (" + to_string(mode) + "): ";
  if (ok()) return out + "ok";
  out += std::to_string(violations.size()) + " violation(s)";
  for (const auto& v : violations) out += "\n  [" + v.rule + "] " + v.message;
  return out;
}

std::string to_string(ValidationMode mode) { return mode == ValidationMode::strict ? "strict" : "general"; }

SystemSpec random_positive_spec(std::int64_t p, std::int64_t q, const ExactRational& a, const ExactRational& b,
                                std::mt19937_64& rng) {
  std::uniform_int_distribution<long> draw(1, 16);
  SystemSpec spec{a, b, p, q, {}, {}};
  const auto length = static_cast<std::size_t>(spec.history());
  for (auto* list : {&spec.x_init, &spec.y_init}) {
    list->reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
      const long num = draw(rng);
      const long den = draw(rng);
      list->emplace_back(mpz_class(num), mpz_class(den));
    }
  }
  return spec;
}

SystemSpec constant_spec(std::int64_t p, std::int64_t q, const ExactRational& a, const ExactRational& b) {
  SystemSpec spec{a, b, p, q, {}, {}};
  spec.x_init.assign(static_cast<std::size_t>(spec.history()), ExactRational(1));
  spec.y_init = spec.x_init;
  return spec;
}

}  // namespace perisys
