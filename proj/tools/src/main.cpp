#include <iostream>
#include <string>
#include <vector>

#include "macrofin/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return macrofin::cli::run(args, std::cout, std::cerr);
}
