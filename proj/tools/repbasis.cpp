#include <iostream>

#include "repbasis/cli.hpp"

int main(int argc, char** argv) { return repbasis::cli::main(argc, argv, std::cout, std::cerr); }
