#include "dp5/cli.hpp"

#include <iostream>

int main(int argc, char** argv) { return dp5::run(argc, argv, std::cout, std::cerr); }
