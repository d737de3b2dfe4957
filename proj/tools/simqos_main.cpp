// -*- c-basic-offset: 4; indent-tabs-mode: nil -*-
#include <iostream>
#include <string>
#include <vector>

#include "simqos/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return simqos::cli::run_main(args, std::cout, std::cerr);
}
