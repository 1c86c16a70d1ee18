#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) {
  return eseries::cli::run(argc, argv, std::cout, std::cerr);
}
