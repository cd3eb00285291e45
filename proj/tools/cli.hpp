#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace famop::cli {

enum ExitCode { kPassed = 0, kFailed = 1, kUsage = 2, kResource = 3 };

// JSON report on out, human summary on err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace famop::cli
