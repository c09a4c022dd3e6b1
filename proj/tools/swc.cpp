#include <iostream>
#include <string>
#include <vector>

#include "swc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return swc::cli_main(args, std::cout, std::cerr);
}
