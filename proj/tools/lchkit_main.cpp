#include <iostream>

#include "lchkit/cli.hpp"

int main(int argc, char** argv) {
  return lchkit::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
