#ifndef GAIDS_TOOLS_CLI_HPP
#define GAIDS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace gaids::cli {

enum ExitCode : int {
    kOk = 0,
    kRuntimeError = 1,
    kConfigError = 2,
    kParseError = 3,
    kModelError = 4,
};

/// Entry point behind the `gaids` binary; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gaids::cli

#endif
