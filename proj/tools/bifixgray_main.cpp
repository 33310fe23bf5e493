#include <iostream>

#include "bifixgray/cli.hpp"

int main(int argc, char** argv) { return bifixgray::cli::run(argc, argv, std::cout, std::cerr); }
