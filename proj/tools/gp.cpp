#include "gp/cli.hpp"

#include <iostream>

int main(int argc, char** argv) {
  return gp::cli::run(argc, argv, std::cout, std::cerr);
}
