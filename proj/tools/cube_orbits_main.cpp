#include <iostream>
#include <string>
#include <vector>

#include "cube_orbits/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cube_orbits::cli::run(args, std::cout, std::cerr);
}
