#include <iostream>

#include "hermit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return hermit::cli::run(args, std::cout, std::cerr);
}
