#include <cstdio>
#include <ostream>

#include "perisys/simulator.hpp"

namespace perisys {

std::string format_log(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_csv(std::ostream& out, const Trajectory& traj) {
  const bool exact = traj.backend() == Backend::exact;
  out << "n,x,y,sign_x,log_abs_x,sign_y,log_abs_y\n";
  for (std::int64_t n = 1; n <= traj.last_index(); ++n) {
    const SignedLog lx = traj.log_x(n);
    const SignedLog ly = traj.log_y(n);
    out << n << ',' << (exact ? traj.x(n).str() : "") << ',' << (exact ? traj.y(n).str() : "") << ',' << lx.sign
        << ',' << format_log(lx.logmag) << ',' << ly.sign << ',' << format_log(ly.logmag) << '\n';
  }
}

nlohmann::json trajectory_to_json(const Trajectory& traj) {
  const bool exact = traj.backend() == Backend::exact;
  nlohmann::json rows = nlohmann::json::array();
  for (std::int64_t n = 1; n <= traj.last_index(); ++n) {
    const SignedLog lx = traj.log_x(n);
    const SignedLog ly = traj.log_y(n);
    nlohmann::json row{{"n", n},
                       {"sign_x", lx.sign},
                       {"log_abs_x", lx.logmag},
                       {"sign_y", ly.sign},
                       {"log_abs_y", ly.logmag}};
    if (exact) {
      row["x"] = traj.x(n).str();
      row["y"] = traj.y(n).str();
    }
    rows.push_back(std::move(row));
  }
  return {{"spec", spec_to_json(traj.spec())}, {"backend", to_string(traj.backend())}, {"rows", std::move(rows)}};
}

}  // namespace perisys
