#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chernform::cli {

/// Exit codes of run().
enum ExitCode : int { kPass = 0, kCheckFailed = 1, kBadInput = 2 };

/// Parses `args` (without the program name), executes one subcommand and
/// writes the report to `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chernform::cli
