#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dbracket {

enum ExitCode : int { exit_ok = 0, exit_failure = 1, exit_usage = 2 };

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`, diagnostics and usage text to `err`. The verify sweep seed comes
/// from the DB_SEED environment variable (default 0).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
            const std::string& program = "dbracket");

}  // namespace dbracket
