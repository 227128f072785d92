#include <iostream>
#include <string>
#include <vector>

#include "spotlight/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return spotlight::cli::run(std::move(args), std::cout, std::cerr);
}
