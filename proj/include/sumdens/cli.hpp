#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sumdens {

enum class ExitCode : int { Ok = 0, Error = 1, Infeasible = 2 };

// Runs one command line (without the program name). The payload goes to `out`, or to the
// file named by --out; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumdens
