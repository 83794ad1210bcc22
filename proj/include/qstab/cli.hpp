#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qstab {

/// Runs the qstab command line on `args` (without the program name) and
/// writes the report to `out` and diagnostics to `err`. Returns the process
/// exit status: 0 success, 2 user error, 3 inconclusive / resource limit.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qstab
