#include <iostream>

#include "thyper/cli.hpp"

int main(int argc, char** argv) { return thyper::cli::run_cli(argc, argv, std::cout, std::cerr); }
