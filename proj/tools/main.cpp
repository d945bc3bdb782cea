#include <iostream>

#include "rnaposet/cli.hpp"

int main(int argc, char** argv) { return rnaposet::run_cli(argc, argv, std::cout, std::cerr); }
