#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace thurstonkit::cli {

// Runs one invocation. `args` excludes the program name. Returns 0 on
// success, 1 when a verification check fails, and 2 on usage or contract
// errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace thurstonkit::cli
