#include <iostream>

#include "euclid/cli.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    const auto res = euclid::run_cli(args);
    (res.status == euclid::exit_ok || res.status == euclid::exit_not_euclidean ? std::cout : std::cerr) << res.out;
    return res.status;
}
