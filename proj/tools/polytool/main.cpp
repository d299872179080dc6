#include <iostream>
#include <string>
#include <vector>

#include "polytool/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return polytool::run_cli(args, std::cout, std::cerr);
}
