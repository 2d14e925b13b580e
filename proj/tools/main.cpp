#include "bmat/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    bool machine = false;
    const auto outcome = bmat::cli::run(args, std::cout, &machine);
    std::cout.flush();
    std::cout << outcome.render(machine);
    return outcome.exit_code;
}
