#include <iostream>

#include "hedonica/cli.hpp"

int main(int argc, char** argv) {
    return hedonica::cli_main(argc, argv, std::cout, std::cerr);
}
