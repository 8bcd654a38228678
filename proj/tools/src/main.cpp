#include <iostream>

#include "kanact/cli.hpp"

int main(int argc, char** argv) { return kanact::run_cli(argc, argv, std::cout, std::cerr); }
