#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace homolocal::cli {

/// Exit codes of the command-line front end.
enum Exit : int
{
    kOk = 0,
    kFailure = 1,
    kInputError = 2,
    kNoClass = 3,
};

/// Runs the `homolocal` command line; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace homolocal::cli
