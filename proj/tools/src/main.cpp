#include <iostream>

#include "tworep_cli/cli.hpp"

int main(int argc, char** argv) { return tworep::cli::run(argc, argv, std::cout, std::cerr); }
