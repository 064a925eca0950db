#include <iostream>
#include <string>
#include <vector>

#include "enriques/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return enriques::run_cli(args, std::cin, std::cout, std::cerr);
}
