#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace perisys {

/// Entry point of the `perisys` tool. `args` excludes the program name.
/// Exit codes: 0 success, 1 invalid input or failed checks, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace perisys
