#include <iostream>

#include "isogeny/cli.hpp"

int main(int argc, char** argv) { return iso::main_entry(argc, argv, std::cout, std::cerr); }
