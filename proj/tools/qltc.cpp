#include <iostream>
#include <string>
#include <vector>

#include "qltc/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return qltc::cli::run(std::move(args), std::cout, std::cerr);
}
