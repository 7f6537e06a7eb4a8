#include <iostream>
#include <string>
#include <vector>

#include "richsf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + (argc > 0 ? 1 : 0), argv + argc);
  return richsf::cli::run(args, std::cout, std::cerr);
}
