#include <iostream>

#include "kaa/cli.hpp"

int main(int argc, char **argv) {
  return kaa::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
