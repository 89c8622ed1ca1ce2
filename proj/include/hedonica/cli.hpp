#ifndef HEDONICA_CLI_HPP
#define HEDONICA_CLI_HPP

#include <iosfwd>

namespace hedonica {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
    kExitSuccess = 0,   // success, property holds, solution exists
    kExitNegative = 1,  // property fails, no solution exists
    kExitUsage = 2,     // usage, parse or input error
    kExitResource = 3,  // enumeration limit or budget exhausted
};

/// Entry point behind the `hedonica` executable. Reports go to `out`,
/// diagnostics to `err`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hedonica

#endif  // HEDONICA_CLI_HPP
