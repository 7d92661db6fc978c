#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace curv2k::cli {

enum ExitCode : int { ok = 0, mismatch = 1, usage = 2, numeric = 3 };

/// Runs one subcommand. args excludes the program name. JSON goes to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace curv2k::cli
