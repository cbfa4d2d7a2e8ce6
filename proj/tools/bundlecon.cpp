#include <iostream>

#include "bundlecon/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto report = bundlecon::runCommand(args);
  (report.exitCode == 0 ? std::cout : std::cerr) << report.output();
  return report.exitCode;
}
