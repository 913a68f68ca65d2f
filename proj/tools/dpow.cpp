#include <iostream>

#include "dpow/cli.hpp"

int main(int argc, char** argv) { return dpow::cli::run(argc, argv, std::cout, std::cerr); }
