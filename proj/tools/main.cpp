#include <iostream>

#include "arcrope/cli.hpp"

int main(int argc, char** argv) {
    return arcrope::run_cli(argc, argv, std::cout, std::cerr);
}
