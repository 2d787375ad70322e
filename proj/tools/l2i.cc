#include <iostream>
#include <string>
#include <vector>

#include "l2i/cli.h"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return l2i::cli::run(args, std::cout, std::cerr);
}
