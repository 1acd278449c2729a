#include "minsurf/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return minsurf::cli_main(argc, argv, std::cout, std::cerr);
}
