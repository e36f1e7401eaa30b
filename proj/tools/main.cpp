#include <iostream>

#include <ospm/cli.hpp>

int main(int argc, char **argv)
{
    return ospm::cli::run(argc, argv, std::cout, std::cerr);
}
