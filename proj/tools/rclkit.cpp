#include <iostream>

#include "rclkit/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return rclkit::run(args, std::cout, std::cerr);
}
