#include <iostream>

#include "diskpoisson/cli.hpp"

int main(int argc, char** argv) { return diskpoisson::cli::main_entry(argc, argv, std::cout, std::cerr); }
