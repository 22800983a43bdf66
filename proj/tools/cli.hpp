#ifndef NSLEN_TOOLS_CLI_HPP
#define NSLEN_TOOLS_CLI_HPP

#include <iosfwd>

namespace nslen {

enum ExitCode { ExitOk = 0, ExitProvenFail = 1, ExitUsage = 2, ExitTier = 3 };

/// The `nslen` command line. Reads the optional NSLEN_CONFIG file, writes
/// reports to `out` and diagnostics to `err`.
int cli_main(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace nslen

#endif // NSLEN_TOOLS_CLI_HPP
