#ifndef CELLRES_CLI_CLI_HPP
#define CELLRES_CLI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace cellres::cli {

/// Exit codes of `run`.
enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,
  kParseError = 2,
  kPreconditionFailure = 3,
  kDisagreement = 4,
};

/// Runs one command line (without the program name), writing the report to
/// `out` and diagnostics to `err`.  Returns one of the exit codes above.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cellres::cli

#endif  // CELLRES_CLI_CLI_HPP
