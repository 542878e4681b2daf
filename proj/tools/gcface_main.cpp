#include <iostream>
#include <string>
#include <vector>

#include "gcface/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gcface::run_cli(args, std::cout, std::cerr);
}
