#include <iostream>

#include "volset/cli.hpp"

int main(int argc, char** argv)
{
    return volset::run_command(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
