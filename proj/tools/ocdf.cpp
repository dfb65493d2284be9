#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <unistd.h>

#include "ocdf/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  bool styled = isatty(STDOUT_FILENO) && std::getenv("OCDF_NO_COLOR") == nullptr;
  return ocdf::cli::main_entry(args, std::cin, std::cout, std::cerr, styled);
}
