#include "phirep/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return phirep::run_cli(args, std::cout, std::cerr);
}
