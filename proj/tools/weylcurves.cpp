#include <iostream>

#include "weylcurves/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return weylcurves::run(args, std::cout, std::cerr);
}
