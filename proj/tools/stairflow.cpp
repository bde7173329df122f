#include "stairflow/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return stairflow::run_cli(argc, argv, std::cout, std::cerr); }
