#include <iostream>

#include "gsf/cli.hpp"

int main(int argc, char** argv) { return gsf::cli::run(argc, argv, std::cout, std::cerr); }
