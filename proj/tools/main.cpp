#include <iostream>

#include "berezin/cli.hpp"

int main(int argc, char** argv) {
    return berezin::run_cli(argc, argv, std::cout, std::cerr);
}
