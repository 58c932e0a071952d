#include <iostream>

#include "wordmetrics/cli.hpp"

int main(int argc, char** argv) {
  return wordmetrics::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
