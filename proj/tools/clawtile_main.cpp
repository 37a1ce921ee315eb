#include <iostream>
#include <string>
#include <vector>

#include "clawtile/cli.hpp"

int main(int argc, char** argv) {
  return clawtile::cli_main(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
