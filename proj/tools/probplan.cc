#include "probplan/cli.h"

#include <iostream>

int main(int argc, char **argv) {
    return probplan::run_cli(argc, argv, std::cout, std::cerr);
}
