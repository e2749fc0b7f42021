#ifndef OBP_CLI_HPP
#define OBP_CLI_HPP

#include <iosfwd>

namespace obp::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2, resource_limit = 3 };

/// Entry point of the `obp` tool; argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace obp::cli

#endif  // OBP_CLI_HPP
