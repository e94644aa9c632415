#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hesscell {

enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2, kExitBudget = 3 };

// args excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hesscell
