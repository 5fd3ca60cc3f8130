#include <iostream>
#include <string>
#include <vector>

#include "mpt/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mpt::run_cli(args, std::cout, std::cerr);
}
