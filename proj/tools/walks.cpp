#include "walks/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return walks::run_cli(argc, argv, std::cin, std::cout, std::cerr); }
