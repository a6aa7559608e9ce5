#include <iostream>
#include <string>
#include <vector>

#include "quandle_lab/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return quandle_lab::run(args, std::cout, std::cerr);
}
