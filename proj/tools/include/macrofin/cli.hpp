#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace macrofin::cli {

enum ExitCode : int {
  exit_ok = 0,
  exit_validation = 1,
  exit_usage = 2,
  exit_io = 3,
};

/// Runs one subcommand. `args` excludes the program name. CSV output that is
/// directed to "-" goes to `out`; diagnostics and progress go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace macrofin::cli
