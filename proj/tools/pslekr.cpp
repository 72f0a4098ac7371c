#include <iostream>

#include "pslekr/cli.hpp"

int main(int argc, char** argv) { return pslekr::run_cli(argc, argv, std::cout, std::cerr); }
