#include <iostream>

#include "qla/cli.hpp"

int main(int argc, char** argv) {
  return qla::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
