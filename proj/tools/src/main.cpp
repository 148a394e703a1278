#include <iostream>

#include "locmod_cli/app.hpp"

int main(int argc, char** argv) { return locmod::cli::run(argc, argv, std::cout, std::cerr); }
