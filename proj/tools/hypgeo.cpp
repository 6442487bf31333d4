#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "hypgeo/cli.hpp"

int main(int argc, char** argv) {
  const char* no_color = std::getenv("NO_COLOR");
  const bool color = isatty(STDOUT_FILENO) && (no_color == nullptr || *no_color == '\0');
  const std::vector<std::string> args(argv + 1, argv + argc);
  return hypgeo::cli::main_entry(args, std::cout, std::cerr, color);
}
