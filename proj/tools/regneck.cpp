#include <iostream>

#include "regneck/cli.hpp"

int main(int argc, char** argv) {
  return regneck::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
