#include <iostream>

#include "fcsph/cli.hpp"

int main(int argc, char** argv) { return fcsph::run_cli(argc, argv, std::cout, std::cerr); }
