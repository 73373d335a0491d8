#include <iostream>

#include "rootchar/cli.hpp"

int main(int argc, char** argv) { return rootchar::run_cli(argc, argv, std::cout, std::cerr); }
