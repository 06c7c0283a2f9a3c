#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spheretri {

// Runs the command-line driver on `args` (argv without the program name).
// All regular output goes to `out`, diagnostics and warnings to `err`.
// Returns 0 on success, 1 when a verification subcommand found a failing
// claim or an input file could not be processed, 2 on usage errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

} // namespace spheretri
