#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hbcnp::cli {

/// Exit codes shared by every subcommand.
enum Exit : int { kPositive = 0, kNegative = 1, kUndecided = 2, kInputError = 3 };

/// Runs the hbcnp command line on `args` (program name excluded).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hbcnp::cli
