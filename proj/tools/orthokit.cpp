#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "orthokit/cli.hpp"

int main(int argc, char** argv) {
  try {
    return orthokit::cli::run(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
  } catch (std::exception const& e) {
    std::cerr << "orthokit: internal error: " << e.what() << '\n';
    return 3;
  }
}
