#include <iostream>

#include "bernmean/cli.hpp"

int main(int argc, char** argv) {
  return bernmean::run_cli(argc, argv, std::cout, std::cerr);
}
