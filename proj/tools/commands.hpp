#pragma once

#include <ostream>

namespace constaspec::cli {

enum ExitCode : int { ok = 0, mismatch = 1, validation = 2, budget = 3 };

/// Parses argv and runs one subcommand, writing to the given streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace constaspec::cli
