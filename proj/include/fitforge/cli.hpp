#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fitforge {

// Dispatch a full command line (without the program name). Writes the report
// to out and diagnostics to err. Exit codes: 0 success, 1 computation error
// (the library error name is printed), 2 input parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fitforge
