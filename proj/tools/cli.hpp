#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace specker::cli {

enum ExitCode : int {
  ok = 0,
  usage_or_io = 1,
  schema = 2,
  math_domain = 3,
  verification = 4,
};

/// Runs one command. args excludes the program name. JSON results go to
/// out; failures print a single JSON line on err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specker::cli
