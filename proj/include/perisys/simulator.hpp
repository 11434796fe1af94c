#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "perisys/model.hpp"
#include "perisys/rational.hpp"
#include "perisys/signed_log.hpp"

namespace perisys {

enum class Backend { exact, signed_log };

std::string to_string(Backend backend);

enum class Which { x, y };

/// Solution {(x_n, y_n)} for n = -L+1 ... N where L = max(p, q).
///
/// Generation starts at n = 1; indices -L+1 ... 0 hold the initial data. The
/// exact backend stores canonical rationals, the signed-log backend stores
/// sign and ln|value| only.
class Trajectory {
 public:
  Trajectory(SystemSpec spec, Backend backend, std::size_t max_bits = kDefaultMaxBits);

  const SystemSpec& spec() const { return spec_; }
  Backend backend() const { return backend_; }
  std::int64_t first_index() const { return spec_.first_index(); }
  std::int64_t last_index() const { return first_index() + static_cast<std::int64_t>(size()) - 1; }
  bool contains(std::int64_t n) const { return n >= first_index() && n <= last_index(); }

  /// Generates values up to index `n` (no-op when already there). Throws
  /// BitLengthExceeded when an exact value outgrows the cap.
  void extend_to(std::int64_t n);
  void step() { extend_to(last_index() + 1); }

  /// Exact values; throw WrongBackend on a signed-log trajectory.
  const ExactRational& x(std::int64_t n) const;
  const ExactRational& y(std::int64_t n) const;
  const ExactRational& value(Which which, std::int64_t n) const { return which == Which::x ? x(n) : y(n); }

  /// Available on both backends.
  SignedLog log_x(std::int64_t n) const;
  SignedLog log_y(std::int64_t n) const;
  SignedLog log_value(Which which, std::int64_t n) const { return which == Which::x ? log_x(n) : log_y(n); }

  /// Overwrites a stored exact value without regenerating later indices.
  /// Breaks the recurrence on purpose; used to inject faults into checks.
  void overwrite(Which which, std::int64_t n, ExactRational value);

 private:
  std::size_t size() const { return backend_ == Backend::exact ? xs_.size() : log_xs_.size(); }
  std::size_t slot(std::int64_t n) const;
  void require_exact(const char* what) const;

  SystemSpec spec_;
  Backend backend_;
  std::size_t max_bits_;
  std::vector<ExactRational> xs_, ys_;
  std::vector<SignedLog> log_xs_, log_ys_;
};

/// Runs the recurrence through index `n_max` (>= 1). Requires a spec without
/// general-mode violations (ShapeError otherwise).
Trajectory simulate(const SystemSpec& spec, std::int64_t n_max, Backend backend,
                    std::size_t max_bits = kDefaultMaxBits);

/// (x_n y_n)(x_{n-q} y_{n-q}) == a b for every generated n.
bool product_invariant_check(const Trajectory& traj);

/// x_n x_{n-q} == (a/b) x_{n-p} x_{n-p-q} for every n >= max(p, q) + 1, the
/// range in which both x_n and x_{n-q} are generated values.
bool x_relation_check(const Trajectory& traj);

/// Indices t, t+m, t+2m, ... up to the last index, exact values.
std::vector<ExactRational> subsequence(const Trajectory& traj, std::int64_t m, std::int64_t t, Which which);
std::vector<SignedLog> log_subsequence(const Trajectory& traj, std::int64_t m, std::int64_t t, Which which);

/// CSV rows for n = 1 ... N, header n,x,y,sign_x,log_abs_x,sign_y,log_abs_y.
/// x and y are empty on the signed-log backend.
void write_csv(std::ostream& out, const Trajectory& traj);
nlohmann::json trajectory_to_json(const Trajectory& traj);

/// Shortest decimal form with 17 significant digits.
std::string format_log(double value);

}  // namespace perisys
