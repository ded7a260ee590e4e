#include <iostream>
#include <string>
#include <vector>

#include "severi/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return severi::cli::run(args, std::cout, std::cerr);
}
