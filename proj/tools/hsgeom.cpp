#include <iostream>

#include "hsgeom/cli.hpp"

int main(int argc, char** argv) { return hsgeom::run_cli(argc, argv, std::cout, std::cerr); }
