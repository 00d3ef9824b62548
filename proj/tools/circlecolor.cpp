#include <iostream>
#include <string>
#include <vector>

#include "circlecolor/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return circlecolor::cli::run(args, std::cout, std::cerr);
}
