#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qtile/checker.hpp"

namespace qtile::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Runs one command line (args excludes the program name). Exit codes:
/// 0 all equal, 1 mismatch, 2 usage or validation error.
/// 0 when every report is equal, else 1; each mismatch is printed to err.
int exit_status(const std::vector<VerificationReport>& reports, std::ostream& err);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtile::cli
