#include <iostream>
#include <string>
#include <vector>

#include "ttt/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ttt::cli_run(args, std::cout, std::cerr);
}
