#include <iostream>

#include "fcd/cli/app.hpp"

int main(int argc, char** argv) { return fcd::cli::run_cli(argc, argv, std::cout, std::cerr); }
