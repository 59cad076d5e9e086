#include <iostream>

#include "hdal/cli.hpp"

int main(int argc, char** argv) { return hdal::runCli(argc, argv, std::cout, std::cerr); }
