#include <iostream>

#include "grouplin/cli.hpp"

int main(int argc, char** argv) {
    return grouplin::run_cli({argv + 1, argv + argc}, std::cout, std::cerr);
}
