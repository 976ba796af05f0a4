#include <iostream>

#include "fqg_cli/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return fqg::cli::run(args, std::cout, std::cerr);
}
