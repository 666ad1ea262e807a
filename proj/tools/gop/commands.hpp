#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace gop::cli {

enum ExitCode : int { kSuccess = 0, kInternalError = 1, kParseError = 2, kDomainError = 3, kResourceCap = 4 };

// Runs the gop command line; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gop::cli
