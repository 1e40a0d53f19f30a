#include <iostream>

#include "liftscope/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return liftscope::run(args, std::cout, std::cerr);
}
