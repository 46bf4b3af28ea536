#include <iostream>
#include <string>
#include <vector>

#include "dspath/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return dspath::run_command(args, std::cout, std::cerr);
}
