#include <iostream>
#include <string>
#include <vector>

#include "bicat/cli_driver.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bicat::cli::run_cli(std::move(args), std::cout);
}
