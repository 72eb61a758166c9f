#include "symplat/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return symplat::cli::main_entry(argc, argv, std::cout, std::cerr); }
