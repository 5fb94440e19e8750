#include <iostream>

#include "sp2lab/cli/commands.hpp"

int main(int argc, char** argv) { return sp2lab::cli::cli_main(argc, argv, std::cout, std::cerr); }
