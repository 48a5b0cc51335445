#include <iostream>
#include <string>
#include <vector>

#include "comax/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return comax::cli::run(args, std::cout, std::cerr);
}
