#include <iostream>
#include <string>
#include <vector>

#include "colorder/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return colorder::run_command(args, std::cout, std::cerr);
}
