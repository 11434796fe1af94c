#include "perisys/cycle.hpp"

#include <functional>
#include <numeric>
#include <optional>
#include <unordered_map>
#include <vector>

#include "perisys/errors.hpp"

namespace perisys {

namespace {

constexpr std::uint64_t kBase = 0x100000001b3ULL;

// Finds the first recurrence of a window of `width` consecutive items.
//
// Items arrive one at a time as hashes; windows are hashed with a polynomial
// rolling hash, and every hash match is confirmed through `same_window`
// before it is reported. Window k is the one ending at item k + width - 1.
class WindowRepeatFinder {
 public:
  using SameWindow = std::function<bool(std::int64_t, std::int64_t)>;

  WindowRepeatFinder(std::size_t width, SameWindow same_window)
      : width_(width), same_window_(std::move(same_window)) {
    top_power_ = 1;
    for (std::size_t i = 1; i < width_; ++i) top_power_ *= kBase;
  }

  // Returns (earlier window, current window) on the first repeat.
  std::optional<std::pair<std::int64_t, std::int64_t>> push(std::uint64_t item_hash) {
    items_.push_back(item_hash);
    if (items_.size() > width_) rolling_ -= items_[items_.size() - 1 - width_] * top_power_;
    rolling_ = rolling_ * kBase + item_hash;
    if (items_.size() < width_) return std::nullopt;

    const auto current = static_cast<std::int64_t>(items_.size() - width_);
    auto [begin, end] = seen_.equal_range(rolling_);
    for (auto it = begin; it != end; ++it) {
      if (same_window_(it->second, current)) return std::make_pair(it->second, current);
    }
    seen_.emplace(rolling_, current);
    return std::nullopt;
  }

 private:
  std::size_t width_;
  SameWindow same_window_;
  std::uint64_t top_power_ = 1;
  std::uint64_t rolling_ = 0;
  std::vector<std::uint64_t> items_;
  std::unordered_multimap<std::uint64_t, std::int64_t> seen_;
};

std::uint64_t pair_hash(const ExactRational& x, const ExactRational& y) {
  return static_cast<std::uint64_t>(x.hash()) * 0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(y.hash());
}

std::uint64_t sign_hash(int sx, int sy) { return static_cast<std::uint64_t>((sx > 0 ? 1 : 2) + (sy > 0 ? 4 : 8)); }

// Windows index states: state s is the window ending at pair index s.
template <typename SamePair>
WindowRepeatFinder::SameWindow window_comparator(const Trajectory& traj, SamePair same_pair) {
  const std::int64_t width = traj.spec().history();
  return [&traj, width, same_pair](std::int64_t i, std::int64_t j) {
    for (std::int64_t k = 0; k < width; ++k) {
      if (!same_pair(traj, traj.first_index() + i + k, traj.first_index() + j + k)) return false;
    }
    return true;
  };
}

bool same_exact_pair(const Trajectory& traj, std::int64_t i, std::int64_t j) {
  return traj.x(i) == traj.x(j) && traj.y(i) == traj.y(j);
}

bool same_sign_pair(const Trajectory& traj, std::int64_t i, std::int64_t j) {
  return traj.log_x(i).sign == traj.log_x(j).sign && traj.log_y(i).sign == traj.log_y(j).sign;
}

// `ensure(n)` makes index n available before it is hashed.
template <typename Ensure, typename HashAt, typename SamePair>
CycleResult scan(const Trajectory& traj, std::int64_t horizon, Ensure ensure, HashAt hash_at, SamePair same_pair) {
  const std::int64_t history = traj.spec().history();
  WindowRepeatFinder finder(static_cast<std::size_t>(history), window_comparator(traj, same_pair));
  for (std::int64_t n = traj.first_index(); n <= horizon; ++n) {
    ensure(n);
    if (auto hit = finder.push(hash_at(traj, n))) {
      return Periodic{hit->first, hit->second - hit->first, history};
    }
  }
  return NoCycleWithinHorizon{horizon};
}

std::uint64_t exact_pair_hash(const Trajectory& t, std::int64_t n) { return pair_hash(t.x(n), t.y(n)); }

std::uint64_t sign_pair_hash(const Trajectory& t, std::int64_t n) {
  return sign_hash(t.log_x(n).sign, t.log_y(n).sign);
}

void already_there(std::int64_t) {}

}  // namespace

std::int64_t default_horizon(std::int64_t p, std::int64_t q) {
  return 4 * std::lcm(p, 2 * q) + 4 * std::max(p, q);
}

CycleResult detect_cycle(const SystemSpec& spec, std::int64_t horizon, std::size_t max_bits) {
  if (horizon < 1) throw std::invalid_argument("horizon must be positive");
  Trajectory traj(spec, Backend::exact, max_bits);
  return scan(
      traj, horizon, [&traj](std::int64_t n) { traj.extend_to(n); }, exact_pair_hash, same_exact_pair);
}

CycleResult detect_cycle(const Trajectory& traj) {
  if (traj.backend() != Backend::exact) throw WrongBackend("detect_cycle needs the exact backend");
  return scan(traj, traj.last_index(), already_there, exact_pair_hash, same_exact_pair);
}

CycleResult detect_sign_cycle(const Trajectory& traj) {
  return scan(traj, traj.last_index(), already_there, sign_pair_hash, same_sign_pair);
}

bool pairs_repeat(const Trajectory& traj, std::int64_t period, std::int64_t from, std::int64_t to) {
  for (std::int64_t n = from; n <= to; ++n) {
    if (!same_exact_pair(traj, n, n + period)) return false;
  }
  return true;
}

nlohmann::json cycle_to_json(const CycleResult& result) {
  if (const auto* periodic = std::get_if<Periodic>(&result)) {
    return {{"status", "periodic"},
            {"n0", periodic->preperiod},
            {"period", periodic->period},
            {"first_periodic_index", periodic->first_periodic_index()}};
  }
  return {{"status", "no-cycle"}, {"horizon", std::get<NoCycleWithinHorizon>(result).horizon}};
}

}  // namespace perisys
