#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polytool {

enum ExitCode : int {
    kExitOk = 0,
    kExitNotAllInteger = 1,
    kExitInputError = 2,
    kExitInvariantBreach = 3,
};

/// Runs the polytool command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace polytool
