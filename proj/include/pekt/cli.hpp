#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pekt::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kComputationError = 2,
    kVerificationFailure = 3,
};

/// Runs the command line `args` (without the program name). Worker
/// threads come from the THREADS environment variable.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pekt::cli
