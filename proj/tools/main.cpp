#include <iostream>

#include "musico/cli.h"

int main(int argc, char** argv) { return musico::cli_main(argc, argv, std::cout, std::cerr); }
