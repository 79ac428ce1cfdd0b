#include <iostream>
#include <string>
#include <vector>

#include "newtonjump/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return newtonjump::run_command(args, std::cout, std::cerr);
}
