#include <iostream>

#include "acfbands/cli.hpp"

int main(int argc, char** argv) {
    return acfbands::cli::run_cli(argc, argv, std::cout, std::cerr);
}
