#include <iostream>

#include "chordsieve/cli.hpp"

int main(int argc, char** argv) { return chordsieve::cli::run(argc, argv, std::cout, std::cerr); }
