#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace quartic::cli {

// Parses `args` (without the program name), runs the requested subcommand
// and writes results to `out` and diagnostics to `err`.  Returns the process
// exit code: 0 on success, 1 when a computation fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace quartic::cli
