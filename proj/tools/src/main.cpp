#include <iostream>

#include "harmonica_cli/cli.hpp"

int main(int argc, char** argv) { return harmonica::cli::main_with_args(argc, argv, std::cout, std::cerr); }
