#include <iostream>

#include "wh/cli.hpp"

int main(int argc, char** argv) { return wh::run(argc, argv, std::cout, std::cerr); }
