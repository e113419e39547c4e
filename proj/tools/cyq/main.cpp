#include <iostream>

#include "cyq/cli.hpp"

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return cyq::run_cli(args, std::cout, std::cerr);
}
