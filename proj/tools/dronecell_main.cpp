#include <string>
#include <vector>

#include "dronecell/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  return dronecell::cli_dispatch(args);
}
