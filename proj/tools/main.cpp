#include <iostream>

#include "quatspin_cli.hpp"

int main(int argc, char **argv) { return quatspin::cli::run(argc, argv, std::cout, std::cerr); }
