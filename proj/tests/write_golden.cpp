// Regenerates tests/golden from the current build: write_golden <dir>
#include <fstream>
#include <iostream>
#include <sstream>

#include "golden_cases.hpp"
#include "minorb/cli/cli.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: write_golden <dir>\n";
    return 2;
  }
  for (const auto& c : testing::golden_cases()) {
    std::ostringstream out;
    std::ostringstream err;
    if (minorb::cli::run(c.args, out, err) != 0) {
      std::cerr << c.name << ": " << err.str();
      return 1;
    }
    std::ofstream(std::string(argv[1]) + "/" + c.name + ".txt", std::ios::binary) << out.str();
  }
  return 0;
}
