#include <string>
#include <vector>

#include "trellis/cli.hpp"

int main(int argc, char** argv) {
  return trellis::cli::run_command(std::vector<std::string>(argv + 1, argv + argc));
}
