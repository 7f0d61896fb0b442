#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace freeavg {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitMathFailure = 1,  // a verified counterexample was found and printed
    kExitUsage = 2,        // usage, parse, I/O or input-format error
};

/// Runs the `freeavg` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace freeavg
