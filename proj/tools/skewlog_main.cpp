#include "skewlog/cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> max_terms;
    if (const char* env = std::getenv("SKEWLOG_MAX_TERMS"))
        max_terms = env;
    return skewlog::cli::run(args, std::cout, std::cerr, max_terms);
}
