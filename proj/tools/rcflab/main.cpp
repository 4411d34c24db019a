#include <iostream>

#include "rcflab/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rcflab_cli::run(args, std::cout, std::cerr);
}
