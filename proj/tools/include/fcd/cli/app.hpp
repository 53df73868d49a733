#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fcd::cli {

/// Exit codes: 0 YES / valid, 1 NO / invalid, 2 usage or input error,
/// 3 budget or timeout exceeded.
enum ExitCode { kExitYes = 0, kExitNo = 1, kExitUsage = 2, kExitBudget = 3 };

/// Subcommands solve, verify, generate, classify, bench.  The work budget
/// comes from --budget, else FCD_BUDGET, else the library default.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Same, with `args` excluding the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fcd::cli
