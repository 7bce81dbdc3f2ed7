#ifndef BERNMEAN_CLI_HPP
#define BERNMEAN_CLI_HPP

#include <iosfwd>

namespace bernmean {

/// Dispatches the command line: subcommands bound, figure, tables, verify,
/// sequential. Returns the process exit status (0 success, 1 verification
/// failure, 2 argument validation failure). Output goes to `out`,
/// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace bernmean

#endif  // BERNMEAN_CLI_HPP
