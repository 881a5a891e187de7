#include "odbif/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return odbif::run_cli(argc, argv, std::cout, std::cerr); }
