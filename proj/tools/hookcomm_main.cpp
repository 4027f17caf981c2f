#include <iostream>

#include "hookcomm/cli.hpp"

int main(int argc, char** argv) {
    return hookcomm::cli::main_entry(argc, argv, std::cout, std::cerr);
}
