#include <iostream>

#include "loopcoprod/cli.hpp"

int main(int argc, char** argv) {
  return loopcoprod::run_cli(argc, argv, std::cout, std::cerr);
}
