#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lmbeta::cli {

/// Runs one CLI invocation (subcommands: generate, ensemble, estimate,
/// transform). `args` excludes the program name. Returns the process exit
/// code: 0 ok, 2 bad arguments or input, 3 I/O failure, 4 singular operator.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

int run(int argc, const char* const* argv);

}  // namespace lmbeta::cli
