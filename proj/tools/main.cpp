#include <iostream>

#include "torunits/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return torunits::cli::run(args, std::cout, std::cerr);
}
