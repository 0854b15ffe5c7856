#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tbn {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_check_failed = 1, exit_usage = 2, exit_budget = 3 };

/// Runs the `tbn` command line. `args` excludes the program name.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace tbn
