#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace composet::cli {

/// Runs one CLI invocation. `args` excludes the program name. Returns the
/// process exit code: 0 success, 1 usage error, 2 domain error, 3 a verify
/// subcommand whose checks did not all pass. Errors go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace composet::cli
