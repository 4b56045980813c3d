#include <iostream>
#include <vector>

#include "grasscode/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return grasscode::cli::run_cli(std::move(args), std::cin, std::cout, std::cerr);
}
