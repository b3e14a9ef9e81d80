#include <iostream>

#include "jetclosure/cli.hpp"

int main(int argc, char** argv) { return jetclosure::cli::run(argc, argv, std::cout, std::cerr); }
