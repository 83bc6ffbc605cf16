#include <iostream>
#include <string>
#include <vector>

#include "spair/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv, argv + argc);
  return spair::cli::run(args, std::cout, std::cerr);
}
