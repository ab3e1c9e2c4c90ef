#include <iostream>

#include "scsa/cli.hpp"

int main(int argc, char** argv) { return scsa::cli::run(argc, argv, std::cout, std::cerr); }
