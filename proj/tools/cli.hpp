#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oamrcs::cli {

/// Runs the command line `args` (args[0] is the program name). Normal output
/// goes to `out`, a single-line diagnostic to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oamrcs::cli
