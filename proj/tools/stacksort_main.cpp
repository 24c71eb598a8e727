#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "stacksort/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env_max_n;
  if (const char* v = std::getenv("STACKSORT_MAX_N")) env_max_n = v;
  return stacksort::cli::run(args, std::cout, std::cerr, env_max_n);
}
