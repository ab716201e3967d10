#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hermit::cli {

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kMismatch = 2;

/// Runs one command line (without the program name). Reports go to out or
/// to the --output file, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hermit::cli
