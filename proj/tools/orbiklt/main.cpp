#include <iostream>

#include "orbiklt/commands.hpp"

int main(int argc, char** argv) { return orbiklt::cli::run(argc, argv, std::cout, std::cerr); }
