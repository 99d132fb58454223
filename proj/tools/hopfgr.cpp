#include <iostream>
#include <string>
#include <vector>

#include "hopfgr/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hopfgr::run(args, std::cout, std::cerr);
}
