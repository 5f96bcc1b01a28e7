#include "cdcheck/cli.hpp"

#include <iostream>

int main(int argc, char **argv) {
  return cdcheck::cli::run(argc, argv, std::cout, std::cerr);
}
