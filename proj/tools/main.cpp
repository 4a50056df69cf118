#include <iostream>
#include <string>
#include <vector>

#include "gf2conics/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return gf2conics::run_cli(args, std::cout, std::cerr);
}
