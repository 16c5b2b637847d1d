#include <iostream>

#include "pigc_cli.hpp"

int main(int argc, char** argv) { return pigc::cli::run_cli(argc, argv, std::cout, std::cerr); }
