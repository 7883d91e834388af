#pragma once

#include <stdexcept>
#include <string>

#include "hvkit/solution_set.hpp"

namespace hvkit {

// Input or flag validation failure. The top level turns it into exit code 2;
// any other exception becomes exit code 3.
struct CliUsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Solution-set file for the hv command: one solution per line, M
// comma-separated columns, an optional non-numeric header line, '#' comments
// and blank lines ignored.
SolutionSet read_solution_csv(const std::string& path);

// Comma-separated doubles, e.g. "0,0,-1.5".
Vec parse_ref(const std::string& spec);

// Full command-line entry point. Returns the process exit code: 0 success,
// 2 usage or input error, 3 runtime failure.
int run_cli(int argc, const char* const* argv);

}  // namespace hvkit
