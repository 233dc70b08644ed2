#include <iostream>

#include "mmlab/cli.hpp"

int main(int argc, char** argv) { return mmlab::cli::run(argc, argv, std::cout, std::cerr); }
