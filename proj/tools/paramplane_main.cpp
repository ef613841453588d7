#include <iostream>
#include <string>
#include <vector>

#include "paramplane/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return paramplane::cli::main(args, std::cout, std::cerr);
}
