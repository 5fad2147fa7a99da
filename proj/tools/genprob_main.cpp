#include <iostream>

#include "genprob/cli.hpp"

int main(int argc, char** argv) {
  return genprob::run_cli(argc, argv, std::cout, std::cerr);
}
