#include <iostream>
#include <string>
#include <vector>

#include "acgroups/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return acgroups::runCli(std::move(args), std::cout, std::cerr);
}
