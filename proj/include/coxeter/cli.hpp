#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace coxeter::cli {

enum ExitCode : int { kOk = 0, kDomain = 1, kResource = 2, kInvariant = 3 };

/// Runs one command line (without the program name). Results go to `out`,
/// diagnostics to `err`; the return value is the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coxeter::cli
