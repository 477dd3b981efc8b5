#include <iostream>
#include <string>
#include <vector>

#include "addvol/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  addvol::cli::CommandResult r = addvol::cli::run(args);
  std::cout << r.output;
  return r.exit_code;
}
