#include <iostream>
#include <string>
#include <vector>

#include "latbounce/cli.hpp"

int main(int argc, char** argv) {
  return latbounce::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
