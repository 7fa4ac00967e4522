#include <iostream>

#include "diskinterp/cli.hpp"

int main(int argc, char** argv) { return diskinterp::cli::run(argc, argv, std::cout, std::cerr); }
