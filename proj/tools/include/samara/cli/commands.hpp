#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace samara::cli {

enum ExitCode : int {
    kOk = 0,
    kInputError = 2,
    kModelError = 3,
    kInfeasible = 4,
};

/// Runs the `samara` command line (args excludes the program name).
/// Normal output goes to `out`, diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace samara::cli
