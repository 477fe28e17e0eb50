#pragma once

#include <iosfwd>

namespace shadowforge {

/// Parses and executes one command line.  Returns 0 on success, 1 when a
/// verification subcommand reports a failed check, 2 on usage or input
/// errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace shadowforge
