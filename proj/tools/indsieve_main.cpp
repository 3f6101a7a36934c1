#include <iostream>

#include "indsieve/cli.hpp"

int main(int argc, char** argv) { return indsieve::cli::run(argc, argv, std::cin, std::cout, std::cerr); }
