#include <iostream>
#include <string>
#include <vector>

#include "simion/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return simion::cli::run(args, std::cout, std::cerr);
}
