#include <iostream>

#include "fomc/cli/commands.hpp"

int main(int argc, char** argv) { return fomc::cli::run(argc, argv, std::cout, std::cerr); }
