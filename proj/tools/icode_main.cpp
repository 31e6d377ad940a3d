#include <iostream>
#include <string>
#include <vector>

#include "icode/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return icode::run_cli(std::move(args), std::cout, std::cerr);
}
