#include <iostream>

#include "qheis/cli.hpp"

int main(int argc, char** argv) { return qheis::run_cli(argc, argv, std::cout, std::cerr); }
