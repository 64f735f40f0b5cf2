#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schurkit {

/// Exit statuses of the command-line front end.
enum ExitStatus : int { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

/// Runs one invocation. `args` excludes the program name; `in` backs the
/// lone `-` argument.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace schurkit
