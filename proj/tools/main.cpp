#include <iostream>

#include "pgolay/cli.hpp"

int main(int argc, char** argv) {
    return pgolay::run_cli(argc, argv, std::cout, std::cerr);
}
