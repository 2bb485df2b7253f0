#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace superorbit {

/// Exit statuses of the command-line front end.
enum ExitCode : int { kOk = 0, kUsage = 1, kPrecondition = 2, kVerification = 3 };

/// Runs one command. `args` excludes the program name. Algebra inputs are
/// file paths or "builtin:<name>" for corpus entries.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace superorbit
