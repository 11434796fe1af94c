#include "perisys/simulator.hpp"

#include <algorithm>
#include <cassert>

#include "perisys/errors.hpp"

namespace perisys {

std::string to_string(Backend backend) { return backend == Backend::exact ? "exact" : "log"; }

Trajectory::Trajectory(SystemSpec spec, Backend backend, std::size_t max_bits)
    : spec_(std::move(spec)), backend_(backend), max_bits_(max_bits) {
  const ValidationReport report = validate(spec_, ValidationMode::general);
  if (!report.ok()) throw ShapeError(report.describe());
  if (backend_ == Backend::exact) {
    xs_ = spec_.x_init;
    ys_ = spec_.y_init;
  } else {
    for (const auto& v : spec_.x_init) log_xs_.push_back(to_signed_log(v));
    for (const auto& v : spec_.y_init) log_ys_.push_back(to_signed_log(v));
  }
}

std::size_t Trajectory::slot(std::int64_t n) const {
  if (!contains(n)) {
    throw std::out_of_range("index " + std::to_string(n) + " outside trajectory [" + std::to_string(first_index()) +
                            ", " + std::to_string(last_index()) + "]");
  }
  return static_cast<std::size_t>(n - first_index());
}

void Trajectory::require_exact(const char* what) const {
  if (backend_ != Backend::exact) throw WrongBackend(std::string(what) + " needs the exact backend");
}

void Trajectory::extend_to(std::int64_t n) {
  const auto p = static_cast<std::size_t>(spec_.p);
  const auto q = static_cast<std::size_t>(spec_.q);
  if (backend_ == Backend::exact) {
    const std::size_t target = n < first_index() ? 0 : static_cast<std::size_t>(n - first_index() + 1);
    if (target > xs_.capacity()) {
      xs_.reserve(std::max(target, 2 * xs_.capacity()));
      ys_.reserve(std::max(target, 2 * ys_.capacity()));
    }
    while (xs_.size() < target) {
      const std::size_t i = xs_.size();
      const ExactRational& y_lag_p = ys_[i - p];
      assert(!y_lag_p.is_zero() && !xs_[i - q].is_zero());
      ExactRational x_new = spec_.a / y_lag_p;
      ExactRational y_new = spec_.b * y_lag_p / (xs_[i - q] * ys_[i - q]);
      enforce_bit_cap(x_new, max_bits_);
      enforce_bit_cap(y_new, max_bits_);
      xs_.push_back(std::move(x_new));
      ys_.push_back(std::move(y_new));
    }
  } else {
    const std::size_t target = n < first_index() ? 0 : static_cast<std::size_t>(n - first_index() + 1);
    const SignedLog a = to_signed_log(spec_.a);
    const SignedLog b = to_signed_log(spec_.b);
    while (log_xs_.size() < target) {
      const std::size_t i = log_xs_.size();
      const SignedLog y_lag_p = log_ys_[i - p];
      log_xs_.push_back(a / y_lag_p);
      log_ys_.push_back(b * y_lag_p / (log_xs_[i - q] * log_ys_[i - q]));
    }
  }
}

const ExactRational& Trajectory::x(std::int64_t n) const {
  require_exact("x(n)");
  return xs_[slot(n)];
}

const ExactRational& Trajectory::y(std::int64_t n) const {
  require_exact("y(n)");
  return ys_[slot(n)];
}

SignedLog Trajectory::log_x(std::int64_t n) const {
  return backend_ == Backend::exact ? to_signed_log(xs_[slot(n)]) : log_xs_[slot(n)];
}

SignedLog Trajectory::log_y(std::int64_t n) const {
  return backend_ == Backend::exact ? to_signed_log(ys_[slot(n)]) : log_ys_[slot(n)];
}

void Trajectory::overwrite(Which which, std::int64_t n, ExactRational value) {
  require_exact("overwrite");
  auto& list = which == Which::x ? xs_ : ys_;
  list[slot(n)] = std::move(value);
}

Trajectory simulate(const SystemSpec& spec, std::int64_t n_max, Backend backend, std::size_t max_bits) {
  if (n_max < 1) throw std::invalid_argument("simulate needs N >= 1");
  Trajectory traj(spec, backend, max_bits);
  traj.extend_to(n_max);
  return traj;
}

bool product_invariant_check(const Trajectory& traj) {
  if (traj.backend() != Backend::exact) throw WrongBackend("product_invariant_check needs the exact backend");
  const SystemSpec& spec = traj.spec();
  const ExactRational ab = spec.a * spec.b;
  for (std::int64_t n = 1; n <= traj.last_index(); ++n) {
    const std::int64_t lag = n - spec.q;
    if ((traj.x(n) * traj.y(n)) * (traj.x(lag) * traj.y(lag)) != ab) return false;
  }
  return true;
}

bool x_relation_check(const Trajectory& traj) {
  if (traj.backend() != Backend::exact) throw WrongBackend("x_relation_check needs the exact backend");
  const SystemSpec& spec = traj.spec();
  const ExactRational c = spec.c();
  for (std::int64_t n = spec.history() + 1; n <= traj.last_index(); ++n) {
    if (traj.x(n) * traj.x(n - spec.q) != c * traj.x(n - spec.p) * traj.x(n - spec.p - spec.q)) return false;
  }
  return true;
}

namespace {

void check_subsequence_args(std::int64_t m, std::int64_t t) {
  if (m < 1) throw std::invalid_argument("subsequence step must be positive");
  if (t < 0 || t >= m) throw std::invalid_argument("subsequence offset must lie in [0, m)");
}

}  // namespace

std::vector<ExactRational> subsequence(const Trajectory& traj, std::int64_t m, std::int64_t t, Which which) {
  check_subsequence_args(m, t);
  std::vector<ExactRational> out;
  for (std::int64_t n = t; n <= traj.last_index(); n += m) out.push_back(traj.value(which, n));
  return out;
}

std::vector<SignedLog> log_subsequence(const Trajectory& traj, std::int64_t m, std::int64_t t, Which which) {
  check_subsequence_args(m, t);
  std::vector<SignedLog> out;
  for (std::int64_t n = t; n <= traj.last_index(); n += m) out.push_back(traj.log_value(which, n));
  return out;
}

}  // namespace perisys
