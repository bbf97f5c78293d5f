#include <iostream>
#include <string>
#include <vector>

#include "bsinv_app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return bsinv::cli::run(args, std::cout, std::cerr);
}
