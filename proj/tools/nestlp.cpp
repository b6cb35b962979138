// SPDX-License-Identifier: Apache-2.0
#include "nestlp/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  std::vector<std::string> args(argv + 1, argv + argc);
  return nestlp::run_cli(args, std::cin, std::cout, std::cerr);
}
