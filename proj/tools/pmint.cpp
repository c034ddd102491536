#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "pmint/cli.hpp"

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  try {
    return pmint::cli::run_args(std::vector<std::string>(argv + 1, argv + argc), std::cin,
                                std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 70;
  }
}
