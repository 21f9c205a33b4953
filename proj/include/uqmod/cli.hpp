#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace uqmod {

/// Runs the command-line interface on already-split arguments (without the
/// program name). Returns the process exit code:
/// 0 ok, 2 validation failure, 3 not dominant, 4 inconclusive,
/// 5 budget exceeded.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace uqmod
