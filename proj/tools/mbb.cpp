#include <iostream>

#include "mbb/cli.hpp"

int main(int argc, char **argv) {
  return mbb::run(argc, argv, std::cout, std::cerr);
}
