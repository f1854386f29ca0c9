#include <iostream>

#include "qeis/cli.hpp"

int main(int argc, char** argv) { return qeis::cli::run(argc, argv, std::cout, std::cerr); }
