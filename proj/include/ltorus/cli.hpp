#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ltorus {

// Runs the command-line front end. Exit codes: 0 success, 1 invalid input,
// 2 budget or limit exceeded, 3 property violation (equivalence command).
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace ltorus
