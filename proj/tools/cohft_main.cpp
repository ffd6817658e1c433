#include <iostream>
#include <vector>

#include "cohft/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cohft::runCli(args, std::cout, std::cerr);
}
