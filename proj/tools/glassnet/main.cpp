#include <iostream>

#include "glassnet/commands.hpp"

int main(int argc, char** argv) {
  return glassnet::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
