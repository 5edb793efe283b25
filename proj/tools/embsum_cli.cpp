#include <iostream>

#include "embsum/cli_commands.hpp"

int main(int argc, char** argv) { return embsum::cli::run(argc, argv, std::cout, std::cerr); }
