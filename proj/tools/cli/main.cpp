#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) { return kpos::cli::run(argc, argv, std::cout, std::cerr); }
