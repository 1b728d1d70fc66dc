#include <iostream>
#include <string>
#include <vector>

#include "degen/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return degen::cli::run_cli(args, std::cout, std::cerr);
}
