#include <iostream>
#include <string>
#include <vector>

#include "hinterp_tools/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  const std::vector<std::string> args(argv + 1, argv + argc);
  return hinterp::tools::run_cli(args, std::cout, std::cerr);
}
