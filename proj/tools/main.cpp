#include <iostream>
#include <string>
#include <vector>

#include "mobius/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return mobius::cli::main_entry(args, std::cout, std::cerr);
}
