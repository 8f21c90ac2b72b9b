#include <iostream>

#include "cbn/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cbn::cli::run(args, std::cout, std::cerr);
}
