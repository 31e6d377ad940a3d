#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace icode {

/// Runs the command-line tool on the given arguments (program name not
/// included) and returns the process exit code: 0 success/pass,
/// 1 verification failure, 2 invalid arguments, 3 budget exceeded.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace icode
