#include <iostream>
#include <iterator>
#include <string>
#include <unistd.h>
#include <vector>

#include "hbraid/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::string input;
  // Only slurp stdin when it is not a terminal; reduce and --input - read it.
  if (!isatty(STDIN_FILENO)) input.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  auto r = hbraid::run_command(args, input);
  std::cout << r.out;
  std::cerr << r.err;
  return r.exit;
}
