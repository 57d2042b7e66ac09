#include <iostream>

#include "pdm/app/cli.hpp"

int main(int argc, char** argv) { return pdm::app::run_cli(argc, argv, std::cout, std::cerr); }
