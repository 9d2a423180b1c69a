#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace guarding {

// Entry point behind the `guard` binary.  Returns the process exit code:
// 0 success/covered, 1 infeasible/uncovered, 2 malformed input.
int run_command(std::vector<std::string> args, std::ostream& out,
                std::ostream& err);

}  // namespace guarding
