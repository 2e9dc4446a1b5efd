#include <iostream>
#include <string>
#include <vector>

#include "ropa/cli/app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return ropa::cli::run(args, std::cout, std::cerr, ropa::cli::process_environment());
}
