#include <iostream>

#include "sqzero/cli.hpp"

int main(int argc, char** argv) { return sqz::cli::run(argc, argv, std::cout, std::cerr); }
