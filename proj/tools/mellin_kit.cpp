#include <iostream>
#include <string>
#include <vector>

#include "mellin/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return mellin::cli::run(args, std::cout, std::cerr);
}
