#ifndef UDM_CLI_HPP
#define UDM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace udm::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int { kOk = 0, kFail = 1, kUsage = 2 };

/// Runs one command line (args exclude the program name), writing all output
/// to `out` and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace udm::cli

#endif  // UDM_CLI_HPP
