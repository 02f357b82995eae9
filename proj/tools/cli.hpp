#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specladder::cli {

// Full command-line entry point, minus process setup: parses `args` (program
// name excluded), writes results to `out` and diagnostics to `err`, returns
// the process exit code. Exit codes: 0 success, 1 tolerance or consistency
// failure, 2 invalid parameters or malformed input, 3 oracle machinery
// failure (convergence, bracketing, too few bound states, truncation drift).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specladder::cli
