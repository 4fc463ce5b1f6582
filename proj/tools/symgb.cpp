#include <iostream>
#include <string>
#include <vector>

#include <symgb/cli.hpp>

int main(int argc, char **argv)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  return symgb::cli::run_command(std::move(args), std::cout, std::cerr);
}
