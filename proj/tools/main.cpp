#include <iostream>

#include "cli/app.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  return reactlin::cli::run(argc, argv, std::cout, std::cerr);
}
