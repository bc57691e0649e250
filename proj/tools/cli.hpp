#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dcsim::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kRuntimeError = 2 };

/// Entry point shared by the executable and the tests. `args` excludes the
/// program name. Never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dcsim::cli
