#include <iostream>

#include "conepolar/cli.hpp"

int main(int argc, char** argv) { return conepolar::run_cli(argc, argv, std::cout, std::cerr); }
