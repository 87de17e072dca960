#include <iostream>

#include "qmzv/cli.hpp"

int main(int argc, char** argv) { return qmzv::run_cli(argc, argv, std::cout, std::cerr); }
