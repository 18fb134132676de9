#include <atomic>
#include <csignal>
#include <iostream>
#include <string>
#include <vector>

#include "dunkl/cli.hpp"

namespace {

std::atomic<bool> interrupted{false};

extern "C" void on_sigint(int) { interrupted.store(true); }

}  // namespace

int main(int argc, char** argv) {
  std::signal(SIGINT, on_sigint);
  std::vector<std::string> args(argv + 1, argv + argc);
  return dunkl::run_cli(args, std::cout, std::cerr, &interrupted);
}
