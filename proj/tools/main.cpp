#include <iostream>

#include "hardy_cli/cli.hpp"

int main(int argc, char** argv) { return hardy::cli::run_command_line(argc, argv, std::cout, std::cerr); }
