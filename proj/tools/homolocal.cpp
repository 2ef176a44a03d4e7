#include <iostream>

#include "homolocal/cli.hpp"

int main(int argc, char** argv)
{
    return homolocal::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
