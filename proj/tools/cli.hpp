#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace omegalie::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kUsage = 2 };

/// Runs one command line (without the program name). Exit codes: 0 for
/// positive verdicts, 1 for negative or inconclusive verdicts, 2 for usage,
/// input and IO errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace omegalie::cli
