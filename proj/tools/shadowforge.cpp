#include <iostream>

#include "shadowforge/cli.hpp"

int main(int argc, char** argv) {
    return shadowforge::run_cli(argc, argv, std::cout, std::cerr);
}
