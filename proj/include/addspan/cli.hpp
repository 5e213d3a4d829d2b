#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace addspan {

/// Command-line entry point. `args` excludes the program name. Returns 0 for
/// Feasible / Ok, 1 for Infeasible / Violation, 2 for usage, parse or budget
/// errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace addspan
