#include <iostream>

#include "bcast/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return bcast::run_cli(args, std::cout, std::cerr);
}
