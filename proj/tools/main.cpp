#include <iostream>

#include "cnat/cli.hpp"

int main(int argc, char** argv) { return cnat::cli::run(argc, argv, std::cout, std::cerr); }
