#include <arh/cli.hpp>

#include <iostream>

int main(int argc, char** argv) { return arh::cli::run(argc, argv, std::cout, std::cerr); }
