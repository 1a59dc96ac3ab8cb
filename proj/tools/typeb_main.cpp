#include <iostream>

#include "typeb/cli.hpp"

int main(int argc, char** argv) { return typeb::cli::run(argc, argv, std::cout, std::cerr); }
