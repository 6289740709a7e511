// ============================================================================
// groundkit/cli.hpp — Command-line front end
// ============================================================================
//
// Subcommands: grounds, check, prove, verify, tree, compare.  Structured
// output goes to stdout (one document per invocation with --format json),
// diagnostics to stderr.  Exit codes: 0 affirmative/ok, 1 negative answer,
// 2 input error, 3 resource error.  The GROUND_KIT_CAP environment
// variable overrides both the oracle element cap and the union-closure
// cap.
//
// ============================================================================

#ifndef GROUNDKIT_CLI_HPP
#define GROUNDKIT_CLI_HPP

#include <iosfwd>
#include <istream>

namespace groundkit::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitInputError = 2;
inline constexpr int kExitResourceError = 3;

// argv[0] is the program name.  `in` backs `verify -` (read from stdin).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
        std::istream& in);

}  // namespace groundkit::cli

#endif  // GROUNDKIT_CLI_HPP
