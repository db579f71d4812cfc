#include <iostream>

#include "dompack/commands.hpp"

int main(int argc, char** argv) { return dompack::run_cli(argc, argv, std::cout, std::cerr); }
