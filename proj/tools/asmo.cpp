#include <iostream>

#include "asmo/cli.hpp"

int main(int argc, char** argv) { return asmo::cli::dispatch(argc, argv, std::cout, std::cerr); }
