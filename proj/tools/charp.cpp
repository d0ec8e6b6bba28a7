#include <cstdlib>
#include <iostream>

#include "charp/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return charp::cli::run(args, std::cout, std::cerr, std::getenv("CHARP_OUTPUT"));
}
