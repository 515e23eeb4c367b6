#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grouplin {

enum ExitCode : int {
    kExitOk = 0,
    kExitValidation = 1,
    kExitVerification = 2,
    kExitSpaceGuard = 3,
};

/// Runs the grouplin command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grouplin
