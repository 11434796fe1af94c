#include "perisys/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <optional>

#include <CLI11.hpp>

#include "perisys/errors.hpp"
#include "perisys/report.hpp"

namespace perisys {

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t max_bits_from_env() {
  const char* raw = std::getenv("PERISYS_MAX_BITS");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxBits;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) throw UsageError(std::string("PERISYS_MAX_BITS must be a positive integer, got '") + raw + "'");
  return static_cast<std::size_t>(value);
}

// Loads and validates; prints the problem to `err` and returns nullopt on failure.
std::optional<SystemSpec> load_checked(const std::string& path, bool strict, std::ostream& err) {
  SystemSpec spec;
  try {
    spec = load_spec_file(path);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return std::nullopt;
  }
  const ValidationReport report = validate(spec, strict ? ValidationMode::strict : ValidationMode::general);
  if (!report.ok()) {
    err << report.describe() << '\n';
    return std::nullopt;
  }
  return spec;
}

struct Options {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::string config;
  std::int64_t n = 0;
  std::int64_t sim_n = 100;
  std::int64_t horizon = 0;
  std::string backend = "exact";
  std::string format;
  std::string out_path;
  int trials = 3;
  std::optional<int> positional_trials;
  std::uint64_t seed = 1;
  std::int64_t p_min = 1;
  std::int64_t p_max = 0;
  std::int64_t q_max = 0;
  unsigned threads = 0;
  bool strict = false;
};

int cmd_classify(const Options& o, std::ostream& out) {
  const Classification c = classify(o.p, o.q);
  if (o.format == "json") {
    out << classification_to_json(c).dump() << '\n';
    return 0;
  }
  const Decomposition d = decompose(o.p, o.q);
  out << c.summary() << '\n'
      << "reason=" << to_string(c.reason) << '\n'
      << "gcd=" << d.g << " r=" << d.r << " u=" << d.u << " s=" << d.s << " t=" << d.t << '\n'
      << "lcm(p,2q)=" << c.block_modulus << '\n';
  const auto repeated = enumerate_roots(o.p, o.q).repeated();
  out << "repeated_roots=";
  for (std::size_t i = 0; i < repeated.size(); ++i) out << (i ? "," : "") << repeated[i].str();
  out << (repeated.empty() ? "none" : "") << '\n';
  return 0;
}

int cmd_simulate(const Options& o, std::ostream& out, std::ostream& err) {
  auto spec = load_checked(o.config, o.strict, err);
  if (!spec) return kExitFailure;
  const Backend backend = o.backend == "log" ? Backend::signed_log : Backend::exact;
  const Trajectory traj = simulate(*spec, o.sim_n, backend, max_bits_from_env());

  std::ofstream file;
  std::ostream* sink = &out;
  if (!o.out_path.empty()) {
    file.open(o.out_path);
    if (!file) {
      err << "error: cannot write '" << o.out_path << "'\n";
      return kExitFailure;
    }
    sink = &file;
  }
  if (o.format == "json") {
    *sink << trajectory_to_json(traj).dump() << '\n';
  } else {
    write_csv(*sink, traj);
  }
  return 0;
}

int cmd_detect_period(const Options& o, std::ostream& out, std::ostream& err) {
  auto spec = load_checked(o.config, o.strict, err);
  if (!spec) return kExitFailure;
  const std::int64_t horizon = o.horizon > 0 ? o.horizon : default_horizon(spec->p, spec->q);
  out << cycle_to_json(detect_cycle(*spec, horizon, max_bits_from_env())).dump() << '\n';
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  auto spec = load_checked(o.config, o.strict, err);
  if (!spec) return kExitFailure;
  const std::int64_t m = std::lcm(spec->p, 2 * spec->q);
  const std::int64_t n_max = o.n > 0 ? o.n : 2 * m + 2 * spec->history();
  const std::int64_t horizon = o.horizon > 0 ? o.horizon : default_horizon(spec->p, spec->q);
  const RunReport report = run_verify(*spec, n_max, horizon, max_bits_from_env());
  out << report.to_json().dump(2) << '\n';
  if (report.all_passed()) return 0;
  err << "failed checks:";
  for (const auto& name : report.failing()) err << ' ' << name;
  err << '\n';
  return kExitFailure;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  SweepConfig config;
  config.p_min = o.p_min;
  config.p_max = o.p_max;
  config.q_max = o.q_max;
  config.trials = o.positional_trials.value_or(o.trials);
  if (o.horizon > 0) config.horizon = o.horizon;
  config.seed = o.seed;
  config.max_bits = max_bits_from_env();
  config.threads = o.threads;
  const auto rows = run_sweep(config);

  bool ok = true;
  for (const auto& row : rows) ok = ok && row.status != Consistency::inconsistent;
  if (o.format == "json") {
    out << sweep_to_json(config, rows).dump() << '\n';
    return ok ? 0 : kExitFailure;
  }
  out << "# seed=" << config.seed << " trials=" << config.trials << '\n';
  for (const auto& row : rows) {
    const Classification& c = row.classification;
    out << "p=" << row.p << " q=" << row.q << ' ' << c.summary() << " reason=" << to_string(c.reason) << " detector=";
    for (std::size_t i = 0; i < row.trials.size(); ++i) {
      if (i) out << ',';
      if (const auto* hit = std::get_if<Periodic>(&row.trials[i])) {
        out << "period:" << hit->period;
      } else {
        out << "none@" << row.horizon;
      }
    }
    out << ' ' << to_string(row.status) << '\n';
  }
  return ok ? 0 : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact simulator and periodicity classifier for x_n = a/y_{n-p}, y_n = b y_{n-p}/(x_{n-q} y_{n-q})",
               "perisys"};
  app.require_subcommand(1);
  Options o;

  auto* classify_cmd = app.add_subcommand("classify", "Classify (p, q) from the roots of (L^p - 1)(L^q + 1)");
  classify_cmd->add_option("-p", o.p, "delay p")->required()->check(CLI::PositiveNumber);
  classify_cmd->add_option("-q", o.q, "delay q")->required()->check(CLI::PositiveNumber);
  classify_cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto add_config = [&](CLI::App* cmd) {
    cmd->add_option("--config", o.config, "spec JSON file")->required();
    cmd->add_flag("--strict", o.strict, "also require p < q and p not dividing q");
  };

  auto* simulate_cmd = app.add_subcommand("simulate", "Export a trajectory as CSV or JSON");
  add_config(simulate_cmd);
  simulate_cmd->add_option("-n", o.sim_n, "last generated index N")->capture_default_str()->check(CLI::PositiveNumber);
  simulate_cmd->add_option("--backend", o.backend, "exact or log")->check(CLI::IsMember({"exact", "log"}));
  simulate_cmd->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  simulate_cmd->add_option("--out", o.out_path, "write to file instead of standard output");

  auto* detect_cmd = app.add_subcommand("detect-period", "Search for eventual periodicity");
  add_config(detect_cmd);
  detect_cmd->add_option("--horizon", o.horizon, "last index examined (default 4 lcm(p,2q) + 4 max(p,q))")
      ->check(CLI::PositiveNumber);

  auto* verify_cmd = app.add_subcommand("verify", "Run every exact identity check and the classifier cross-check");
  add_config(verify_cmd);
  verify_cmd->add_option("-n", o.n, "last generated index N (default 2 lcm(p,2q) + 2 max(p,q))")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--horizon", o.horizon, "cycle search horizon")->check(CLI::PositiveNumber);

  auto* sweep_cmd = app.add_subcommand("sweep", "Compare classifier and detector over a (p, q) grid");
  sweep_cmd->add_option("p_max", o.p_max, "largest p")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 20));
  sweep_cmd->add_option("q_max", o.q_max, "largest q")->required()->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 20));
  sweep_cmd->add_option("trials_pos", o.positional_trials, "random specs per row")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--trials", o.trials, "random specs per row")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--horizon", o.horizon, "fixed horizon (default per row)")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed", o.seed, "PRNG seed");
  sweep_cmd->add_option("--p-min", o.p_min, "smallest p")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--threads", o.threads, "worker threads (0 = hardware)");
  sweep_cmd->add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front()) {
      err << sub->help();
    } else {
      err << app.help();
    }
    return kExitUsage;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (simulate_cmd->parsed()) return cmd_simulate(o, out, err);
    if (detect_cmd->parsed()) return cmd_detect_period(o, out, err);
    if (verify_cmd->parsed()) return cmd_verify(o, out, err);
    if (sweep_cmd->parsed()) return cmd_sweep(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace perisys
