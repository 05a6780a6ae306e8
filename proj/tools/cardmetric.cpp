#include <iostream>
#include <string>
#include <vector>

#include "cardmetric/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return cardmetric::cli::run(std::move(args), std::cout, std::cerr);
}
