#include <iostream>

#include "padicdx/cli.hpp"

int main(int argc, char** argv) {
  return padicdx::cli::main_entry(argc, argv, std::cout, std::cerr);
}
