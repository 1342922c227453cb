#include <iostream>

#include "olsembed_cli/commands.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return olsembed::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
