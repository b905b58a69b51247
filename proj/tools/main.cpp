#include <iostream>
#include <iterator>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto outcome = hyps::cli::run(args, [] {
    std::ios::sync_with_stdio(false);
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  });
  std::cout << outcome.out;
  std::cerr << outcome.err;
  return outcome.exit_code;
}
