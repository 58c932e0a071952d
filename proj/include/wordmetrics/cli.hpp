#ifndef WORDMETRICS_CLI_HPP_
#define WORDMETRICS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace wordmetrics {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolations = 1,  // a verification found counterexamples
  kExitUsage = 2,       // bad flags, malformed spec, refused by a cap
};

/// Runs the wordmetrics command line.  args[0] is the program name.
/// Results go to `out` (or the --out file), diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wordmetrics

#endif  // WORDMETRICS_CLI_HPP_
