#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ctoda::cli {

enum ExitCode : int {
  kOk = 0,
  kConsistencyFailure = 2,
  kUsage = 3,
  kBudget = 4,
};

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// Convenience for tests: args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ctoda::cli
