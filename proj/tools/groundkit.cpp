#include <iostream>

#include "groundkit/cli.hpp"

int main(int argc, char** argv) {
    return groundkit::cli::run(argc, argv, std::cout, std::cerr, std::cin);
}
