#include <iostream>

#include "skewpbw/cli/app.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return skewpbw::cli::run(args, std::cout, std::cerr);
}
