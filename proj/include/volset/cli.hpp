#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace volset {

enum ExitCode : int {
    kExitOk = 0,
    kExitFailed = 1, // a checked inequality, trace step or coverage claim failed
    kExitUsage = 2,  // bad arguments or input
    kExitBudget = 3, // enumeration budget exceeded
};

/// Runs one subcommand; `args` excludes the program name. The report goes
/// to `out` (or to --out), diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace volset
