#include "polyfrenet/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return polyfrenet::run_cli(argc, argv, std::cout, std::cerr); }
