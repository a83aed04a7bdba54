#include <iostream>

#include "rsf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rsf::run(args, std::cin, std::cout, std::cerr);
}
