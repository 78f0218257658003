#include <iostream>

#include "fattree/cli.hpp"

int main(int argc, char** argv) { return fattree::cli::run(argc, argv, std::cout, std::cerr); }
