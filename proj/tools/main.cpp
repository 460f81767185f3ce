#include "ramabern/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return ramabern::run_cli(argc, argv, std::cout, std::cerr); }
