#include <iostream>
#include <string>
#include <vector>

#include "posmat/document.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return posmat::run_cli(args, std::cout, std::cerr);
}
