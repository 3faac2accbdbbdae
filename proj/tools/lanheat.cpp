#include <iostream>

#include "lanheat/cli/commands.hpp"

int main(int argc, char** argv) { return lanheat::cli::run(argc, argv, std::cout, std::cerr); }
