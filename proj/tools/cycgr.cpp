#include <iostream>

#include "cycgr/cli.hpp"

int main(int argc, char** argv) { return cycgr::cli::run(argc, argv, std::cout, std::cerr); }
