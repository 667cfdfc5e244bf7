#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sfrob::cli {

enum ExitCode : int { kPass = 0, kVerificationFailure = 1, kUsage = 2, kGuardRefusal = 3 };

// argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sfrob::cli
