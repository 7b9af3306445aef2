#include <iostream>

#include "provlog/cli.hpp"

int main( int argc, char** argv ) { return provlog::run_cli( argc, argv, std::cout, std::cerr ); }
