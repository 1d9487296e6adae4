#include "cli.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return euclid::cli::run({argv, static_cast<std::size_t>(argc)}, std::cout, std::cerr);
}
