#include <iostream>

#include "ffzeta/cli.hpp"

int main(int argc, char** argv) {
  return ffzeta::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
