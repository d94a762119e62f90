#include "gsum_cli/app.hpp"

#include <iostream>

int main(int argc, char** argv)
{
    return gsum::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
