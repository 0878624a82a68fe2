#include <iostream>

#include "parlab/cli.hpp"

int main(int argc, char** argv) { return parlab::cli::run(argc, argv, std::cout, std::cerr); }
