#include <iostream>
#include <string>
#include <vector>

#include "spheretri/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return spheretri::run_cli(args, std::cout, std::cerr);
}
