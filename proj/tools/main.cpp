#include <iostream>

#include "paircoh/cli.hpp"

int main(int argc, char** argv) {
  return paircoh::cli::run(argc, argv, std::cout, std::cerr);
}
