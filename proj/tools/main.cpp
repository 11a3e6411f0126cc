#include <iostream>
#include <string>
#include <vector>

#include "supero/app/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return supero::app::run(args, std::cout, std::cerr);
}
