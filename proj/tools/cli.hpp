#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace vfree::cli {

enum ExitCode : int {
    ok = 0,
    usage = 2,
    bad_input = 3,
    not_a_loop = 4,
    internal = 5,
};

/// Runs one vffold command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vfree::cli
