#include <exception>
#include <iostream>

#include "cli_app.hpp"

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        return qg::cli::run(args, std::cout, std::cerr);
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
