#include <iostream>

#include "symisr/cli.hpp"

int main(int argc, char** argv) {
  return symisr::run_cli(argc, argv, std::cout, std::cerr);
}
