#include <iostream>
#include <string>
#include <vector>

#include "nzalex_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return nzalex::cli::run(args, std::cout, std::cerr);
}
