#include <iostream>
#include <string>
#include <vector>

#include "ere/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ere::cli::main(args, std::cout, std::cerr);
}
