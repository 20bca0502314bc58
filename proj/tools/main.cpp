#include <iostream>

#include "dshell/cli.hpp"

int main(int argc, char** argv) {
  return dshell::run_cli(argc, argv, std::cout, std::cerr);
}
