#include <iostream>

#include "rankone/cli.hpp"

int main(int argc, char** argv) {
  return rankone::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
