#include <iostream>

#include "abspec/runner.hpp"

int main(int argc, char** argv) {
  return abspec::cli_main(argc, argv, std::cout, std::cerr);
}
