#include <iostream>

#include "coxeter/cli.hpp"

int main(int argc, char** argv) {
  return coxeter::cli::run({argv + 1, argv + argc}, std::cout, std::cerr);
}
