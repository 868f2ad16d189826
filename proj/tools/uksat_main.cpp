#include <string>
#include <vector>

#include "uksat/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return uksat::run_cli(args);
}
