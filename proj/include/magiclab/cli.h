#ifndef MAGICLAB_CLI_H
#define MAGICLAB_CLI_H

#include <iosfwd>

namespace magiclab {

/// Process exit codes of the magiclab command.
enum ExitCode : int {
    kExitOk = 0,
    kExitParse = 2,
    kExitDimension = 3,
    kExitNotConverged = 4,
    kExitUnsupportedDimension = 5,
};

/// Runs the command line `argv[0..argc)`. Data goes to `out`, logs and
/// diagnostics to `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace magiclab

#endif
