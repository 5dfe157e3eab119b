#include <iostream>

#include "minorb/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return minorb::cli::run(args, std::cout, std::cerr);
}
