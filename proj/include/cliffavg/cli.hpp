#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cliffavg {

// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitInconsistent = 1, kExitUsage = 2 };

// Runs one command. `args` excludes the program name. An expression argument
// equal to "-" is read from `in`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cliffavg
