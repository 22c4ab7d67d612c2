#include <iostream>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const auto parsed = quotlat::cli::parse_args(args, std::cout, std::cerr);
    if (!parsed.request) {
        return parsed.exit_code;
    }
    return quotlat::cli::run(*parsed.request, std::cout, std::cerr);
}
