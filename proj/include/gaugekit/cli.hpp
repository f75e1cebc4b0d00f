#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gaugekit::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kParseError = 2 };

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err. Returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaugekit::cli
