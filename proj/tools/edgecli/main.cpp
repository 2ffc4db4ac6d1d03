#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "edgecli/commands.hpp"

int main(int argc, char** argv) {
  try {
    return edgecli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "edgecli: " << e.what() << '\n';
    return edgecli::kExitBadInput;
  }
}
