#include <iostream>

#include "openspace/cli.hpp"

int main(int argc, char** argv) { return openspace::cli::run(argc, argv, std::cout, std::cerr); }
