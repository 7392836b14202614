#include <iostream>

#include "ssfem/cli.hpp"

int main(int argc, char** argv) { return ssfem::cli::main(argc, argv, std::cout, std::cerr); }
