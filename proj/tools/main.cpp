#include <iostream>

#include "lvl/cli.hpp"

int main(int argc, char** argv) { return lvl::cli_main(argc, argv, std::cout, std::cerr); }
