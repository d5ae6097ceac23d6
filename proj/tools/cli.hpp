#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ramseylab::cli {

enum ExitCode
{
    ok = 0,
    input_error = 1,
    budget_exhausted = 2,
    size_limit = 3,
};

/// Runs the command line `args` (without the program name), writing results
/// to `out` and diagnostics to `err`. `in` feeds graph6 input when no graph is
/// given on the command line.
int run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err);

}
