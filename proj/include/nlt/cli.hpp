#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nlt {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitMathDomain = 3,
};

// args excludes the program name
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nlt
