#pragma once

#include <ostream>

namespace wh {

enum ExitCode { exit_ok = 0, exit_math_error = 1, exit_check_failed = 2, exit_bad_input = 3 };

// Entry point of the command line tool.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace wh
