#include <iostream>

#include "fano7/cli.hpp"

int main(int argc, char** argv) {
    return fano7::run_cli(argc, argv, std::cout, std::cerr);
}
