#include <iostream>

#include "cellres/cli/cli.hpp"

int main(int argc, char** argv) {
  return cellres::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
