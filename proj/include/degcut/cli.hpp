#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace degcut {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    exit_ok = 0,        // success / PASS
    exit_usage = 1,     // usage, parse or I/O error
    exit_negative = 2,  // counterexample found, or the requested object does not exist
    exit_undecided = 3, // cut search budget exhausted before a conclusion
};

/// Runs one CLI invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics and usage text to `err`; graph input is read from `in`
/// unless --input is given.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace degcut
