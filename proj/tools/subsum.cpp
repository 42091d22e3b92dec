#include <iostream>

#include "subsum/cli.hpp"

int main(int argc, char** argv) { return subsum::run_cli(argc, argv, std::cout, std::cerr); }
