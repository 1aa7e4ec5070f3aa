#include <iostream>
#include <string>
#include <vector>

#include "fbp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fbp::run_cli(args, std::cout, std::cerr);
}
