#include <iostream>

#include "graphrank/cli.hpp"

int main(int argc, char** argv) {
    return graphrank::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
