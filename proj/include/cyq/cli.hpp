#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cyq {

/// Runs the command line `args` (without the program name). Returns the exit code:
/// 0 success, 1 solver error or failed verification, 2 usage or I/O error.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace cyq
