#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hjj {

/// Runs one command; `args` excludes the program name.  Returns 0 when every
/// check passes, 1 when a checked property fails and 2 on usage or input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hjj
