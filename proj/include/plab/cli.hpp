#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace plab {

/// Exit statuses of the command line front end.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

/// Runs one subcommand; args excludes the program name. JSON goes to out,
/// diagnostics to err.
int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace plab
