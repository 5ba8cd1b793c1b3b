#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace alp::cli {

enum ExitCode : int {
    ok = 0,
    verification_failure = 1,
    usage_error = 2,
    numerical_failure = 3,
};

/// Runs one command line (args[0] is the program name). Data goes to `out`,
/// diagnostics to `err`. Returns the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace alp::cli
