#pragma once

#include <string>
#include <vector>

namespace bec {

// Runs the command line tool on `args` (without the program name).
// Exit codes: 0 success, 1 invalid input, 2 verification failure,
// 3 exact-solver timeout without --allow-timeout.
int run_cli(const std::vector<std::string>& args);

}  // namespace bec
