#pragma once

// Command-line front end. run() is the whole program minus process setup, so
// tests can drive it in-process.

#include <ostream>
#include <string>
#include <vector>

namespace liftscope {

enum ExitStatus { kExitOk = 0, kExitInputError = 2, kExitInconsistency = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liftscope
