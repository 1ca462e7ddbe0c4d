#include <iostream>
#include <vector>

#include "ltorus/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ltorus::run_cli(args, std::cin, std::cout, std::cerr);
}
