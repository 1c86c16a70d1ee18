#pragma once

#include <iosfwd>

namespace eseries::cli {

// Parses argv and executes one subcommand, writing data to `out` and
// diagnostics to `err`. Returns the process exit code: 0 on success, 1 on a
// verification failure (or an unreachable tolerance / violated bound), 2 on
// a usage error. Never throws; separated from main() so tests can drive it
// with string streams.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eseries::cli
