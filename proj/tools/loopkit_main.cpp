#include <iostream>

#include "loopkit/cli.hpp"

int main(int argc, char** argv) { return loopkit::cli_main(argc, argv, std::cout, std::cerr); }
