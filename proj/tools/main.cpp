#include <iostream>

#include "cheshire/cli.hpp"

int main(int argc, char** argv) { return cheshire::cli_main(argc, argv, std::cout, std::cerr); }
