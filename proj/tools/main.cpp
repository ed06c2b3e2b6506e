#include <iostream>
#include <string>
#include <vector>

#include "nihoapn/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv, argv + argc);
    return nihoapn::cli::run(args, std::cout, std::cerr);
}
