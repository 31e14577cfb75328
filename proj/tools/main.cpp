#include "minorb/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return minorb::run_cli(argc, argv, std::cout, std::cerr); }
