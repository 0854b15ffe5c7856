#include "tbn/cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return tbn::cli_main({argv + 1, argv + argc}, std::cout, std::cerr);
}
