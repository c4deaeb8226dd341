#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace startorus::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kOk = 0,
    kNegative = 1,  // invalid coloring, UNSAT up to kmax
    kUsage = 2,     // bad arguments, unreadable or mismatched input
    kInternal = 3,  // construction failure, exhausted budget
};

/// Runs one invocation (`args[0]` is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace startorus::cli
