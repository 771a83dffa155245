#include <iostream>

#include "infgon/cli.hpp"

int main(int argc, char** argv) {
  return infgon::cli::run_command({argv + 1, argv + argc}, std::cout, std::cerr);
}
