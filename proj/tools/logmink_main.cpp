#include <iostream>
#include <string>
#include <vector>

#include "logmink/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return logmink::cli::run(args, std::cout, std::cerr);
}
