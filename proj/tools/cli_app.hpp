#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cusplab {

// Runs the command-line tool on the given argument list (program name
// excluded). Returns the process exit status: 0 success, 1 usage or
// configuration error, 2 verification failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cusplab
