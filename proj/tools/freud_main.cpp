#include "freud/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return freud::cli::run(argc, argv, std::cout, std::cerr); }
