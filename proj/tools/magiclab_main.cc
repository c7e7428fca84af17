#include <iostream>

#include "magiclab/cli.h"

int main(int argc, char** argv) { return magiclab::run_cli(argc, argv, std::cout, std::cerr); }
