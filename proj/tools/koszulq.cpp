#include <iostream>

#include "koszulq/cli.hpp"

int main(int argc, char** argv) { return kq::run_cli(argc, argv, std::cout, std::cerr); }
