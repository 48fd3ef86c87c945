#include <iostream>
#include <string>
#include <vector>

#include "treedegree/cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return treedegree::cli::run(args, std::cout, std::cerr);
}
