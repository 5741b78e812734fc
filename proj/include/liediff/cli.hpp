#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace liediff {

// Exit status contract of every subcommand.
enum ExitStatus : int {
    kExitOk = 0,          // success / check passed
    kExitCheckFailed = 1, // a check ran and failed; reports are on stdout
    kExitInputError = 2,  // unusable input; message on stderr
};

// Runs one command line (without the program name), e.g.
// {"normalize", "-p", "p1.json", "D2*D1"}. Results go to `out`,
// diagnostics to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace liediff
