#include <iostream>
#include <string>
#include <vector>

#include "kplanar/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return kplanar::cli_main(args, std::cout, std::cerr);
}
