#include <iostream>
#include <string>
#include <vector>

#include "veritas/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return veritas::run_cli(args, std::cout, std::cerr);
}
