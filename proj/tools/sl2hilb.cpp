#include <iostream>
#include <string>
#include <vector>

#include "sl2hilb/cli/commands.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return sl2hilb::cli::run_cli(args, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return sl2hilb::cli::kExitInternal;
  }
}
