#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gradec {

/// Runs one command line (args excludes the program name). Returns the exit
/// code: 0 success, 1 validation failure or bad usage, 2 computation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gradec
