#include <iostream>

#include "fibertoric/cli.hpp"

int main(int argc, char **argv)
{
    return fibertoric::cli::run(argc, argv, std::cout, std::cerr);
}
