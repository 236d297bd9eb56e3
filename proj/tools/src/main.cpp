#include <iostream>

#include "hatsplit_cli/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = hatsplit::cli::run(args);
  if (!result.payload.is_null()) std::cout << result.payload.dump() << '\n';
  if (!result.message.empty()) std::cerr << result.message << '\n';
  std::cerr << "elapsed_us=" << result.elapsed_us << '\n';
  return result.exit_code();
}
