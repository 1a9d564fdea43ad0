#include <iostream>
#include <string>
#include <vector>

#include "ravenlab/lab/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return ravenlab::lab::run_command(args, std::cout, std::cerr);
}
