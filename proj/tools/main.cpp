#include <iostream>
#include <vector>

#include <unistd.h>

#include "modulilog/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    const bool tty = isatty(fileno(stderr)) != 0;
    return modulilog::run_cli(std::move(args), std::cout, std::cerr, tty);
}
